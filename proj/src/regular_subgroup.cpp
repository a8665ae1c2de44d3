#include "layerline/regular_subgroup.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace layerline {

namespace {

using Images = std::vector<int>;

struct ImagesHash {
    std::size_t operator()(const Images& v) const {
        std::size_t h = v.size();
        for (int x : v)
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

struct Searcher {
    int v_count = 0;
    std::uint64_t budget = 0;
    std::uint64_t nodes = 0;

    std::vector<Images> candidate;                      // candidate id -> images
    std::unordered_map<Images, int, ImagesHash> id_of;  // images -> candidate id
    std::vector<std::vector<int>> by_image_of_zero;     // point -> ids mapping 0 there
    std::unordered_set<std::vector<int>, ImagesHash> visited;  // closed subgroups seen

    bool identity_like(const Images& v) const {
        for (int i = 0; i < v_count; ++i)
            if (v[i] != i) return false;
        return true;
    }

    void charge() {
        if (++nodes > budget)
            throw BudgetExceeded("regular-subgroup search exceeded the node budget");
    }

    // Closure of `subgroup` (a closed set of candidate ids, identity
    // implicit) together with g.  Fails fast when a product escapes the
    // candidate set, the element count passes v_count, or the final order
    // does not divide v_count.
    std::optional<std::vector<int>> close(const std::vector<int>& subgroup, int g) {
        std::vector<int> members = subgroup;
        std::unordered_set<int> inside(members.begin(), members.end());
        members.push_back(g);
        inside.insert(g);
        std::vector<int> frontier{g};
        Images prod(static_cast<std::size_t>(v_count));
        while (!frontier.empty()) {
            int x = frontier.back();
            frontier.pop_back();
            std::size_t snapshot = members.size();
            for (std::size_t i = 0; i < snapshot; ++i) {
                for (int flip = 0; flip < 2; ++flip) {
                    charge();
                    const Images& a = candidate[flip ? members[i] : x];
                    const Images& b = candidate[flip ? x : members[i]];
                    for (int j = 0; j < v_count; ++j) prod[j] = a[b[j]];
                    if (identity_like(prod)) continue;
                    auto it = id_of.find(prod);
                    if (it == id_of.end()) return std::nullopt;  // left the candidate set
                    if (inside.insert(it->second).second) {
                        // order would become members.size() + 2 (identity included)
                        if (static_cast<int>(members.size()) + 2 > v_count)
                            return std::nullopt;
                        members.push_back(it->second);
                        frontier.push_back(it->second);
                    }
                }
            }
        }
        int order = static_cast<int>(members.size()) + 1;
        if (v_count % order != 0) return std::nullopt;  // Lagrange pruning
        std::sort(members.begin(), members.end());
        return members;
    }

    // Depth-first extension: while the subgroup is smaller than v_count its
    // orbit of point 0 misses some point, and a regular supergroup must
    // contain an element sending 0 there, so branching over those
    // candidates is exhaustive.
    std::optional<std::vector<int>> dfs(const std::vector<int>& subgroup) {
        if (static_cast<int>(subgroup.size()) + 1 == v_count) return subgroup;
        std::vector<char> in_orbit(static_cast<std::size_t>(v_count), 0);
        in_orbit[0] = 1;
        for (int id : subgroup) in_orbit[candidate[id][0]] = 1;
        int missing = 0;
        while (missing < v_count && in_orbit[missing]) ++missing;
        if (missing == v_count) return std::nullopt;
        for (int g : by_image_of_zero[missing]) {
            charge();
            auto extended = close(subgroup, g);
            if (!extended) continue;
            if (!visited.insert(*extended).second) continue;
            if (auto hit = dfs(*extended)) return hit;
        }
        return std::nullopt;
    }
};

} // namespace

std::optional<FiniteGroup> regular_subgroup_search(const AutomorphismList& aut,
                                                   int v_count,
                                                   const SearchBudget& budget) {
    if (aut.elements.empty())
        throw PreconditionViolated("automorphism list is empty");
    for (const auto& p : aut.elements)
        if (p.degree() != v_count)
            throw PreconditionViolated("automorphism degree differs from v_count");
    if (v_count == 1) return FiniteGroup::from_permutations({Permutation(1)});

    Searcher s;
    s.v_count = v_count;
    s.budget = budget.max_nodes;
    s.by_image_of_zero.assign(static_cast<std::size_t>(v_count), {});

    // Candidates: fixed-point-free elements whose order divides v_count
    // (both forced for members of a regular subgroup), sorted by
    // (order, cycle type, images), identity excluded.
    struct Keyed {
        std::uint64_t order;
        std::vector<int> type;
        const VertexPermutation* perm;
    };
    std::vector<Keyed> filtered;
    for (const auto& p : aut.elements) {
        if (p.is_identity() || p.fixed_points() != 0) continue;
        std::uint64_t ord = p.order();
        if (static_cast<std::uint64_t>(v_count) % ord != 0) continue;
        filtered.push_back({ord, p.cycle_type(), &p});
    }
    std::sort(filtered.begin(), filtered.end(), [](const Keyed& a, const Keyed& b) {
        return std::tie(a.order, a.type, a.perm->images()) <
               std::tie(b.order, b.type, b.perm->images());
    });
    s.candidate.reserve(filtered.size());
    for (const auto& k : filtered) {
        int id = static_cast<int>(s.candidate.size());
        s.candidate.push_back(k.perm->images());
        s.id_of.emplace(k.perm->images(), id);
        s.by_image_of_zero[k.perm->images()[0]].push_back(id);
    }

    auto hit = s.dfs({});
    if (!hit) return std::nullopt;

    std::vector<Permutation> members;
    members.reserve(hit->size() + 1);
    members.emplace_back(v_count);
    for (int id : *hit) members.emplace_back(Images(s.candidate[id]));
    FiniteGroup group = FiniteGroup::from_permutations(std::move(members));

    // Re-verify the defining properties on every hit.
    if (group.order() != v_count)
        throw Error("internal: regular subgroup has the wrong order");
    std::vector<char> covered(static_cast<std::size_t>(v_count), 0);
    for (const auto& p : group.permutations()) {
        covered[p(0)] = 1;
        if (!p.is_identity() && p.fixed_points() != 0)
            throw Error("internal: regular subgroup contains a non-identity fixer");
    }
    if (std::count(covered.begin(), covered.end(), 1) != v_count)
        throw Error("internal: regular subgroup is not transitive");
    return group;
}

} // namespace layerline
