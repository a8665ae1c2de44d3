#include "layerline/cayley.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <unordered_map>
#include <utility>

#include "layerline/errors.hpp"
#include "layerline/layer_graphs.hpp"
#include "layerline/regular_subgroup.hpp"

namespace layerline {

void validate_connection_set(const FiniteGroup& g, const ConnectionSet& s) {
    int prev = -1;
    for (int m : s.members) {
        if (m < 0 || m >= g.order())
            throw InvalidConnectionSet("member index out of range");
        if (m <= prev)
            throw InvalidConnectionSet("members must be strictly ascending");
        if (m == g.identity())
            throw InvalidConnectionSet("identity cannot belong to a connection set");
        prev = m;
    }
    for (int m : s.members)
        if (!std::binary_search(s.members.begin(), s.members.end(), g.inv(m)))
            throw InvalidConnectionSet("connection set is not closed under inverse");
}

Graph cayley_graph(const FiniteGroup& g, const ConnectionSet& s) {
    validate_connection_set(g, s);
    const int order = g.order();
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(order));
    for (int x = 0; x < order; ++x) labels.push_back(g.label(x));
    // Each edge {x, xs} appears once with x < xs and once mirrored through
    // the inverse member, so keeping only ascending pairs lists every edge
    // exactly once.
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(order) * s.members.size() / 2);
    for (int x = 0; x < order; ++x)
        for (int m : s.members) {
            int y = g.mul(x, m);
            if (x < y) edges.emplace_back(x, y);
        }
    return Graph(order, edges, std::move(labels));
}

SemidirectCayley field_semidirect_cayley(const FieldSpec& spec) {
    auto field = std::make_shared<Field>(spec);
    const long long q = field->q();
    if (q < 4 || q > 32)
        throw ParamsOutOfRange("semidirect construction supports 4 <= q <= 32");
    const int qi = static_cast<int>(q);
    const int order = qi * (qi - 1);

    // Pair (u, a), a != 0, lives at index (index(a) - 1) * q + index(u);
    // the identity (0, 1) lands at index 0.
    auto decode = [qi](int idx) { return std::pair(idx % qi, idx / qi + 1); };
    auto encode = [qi](int u_idx, int a_idx) { return (a_idx - 1) * qi + u_idx; };

    auto mul = [field, decode, encode](int lhs, int rhs) {
        auto [u1, a1] = decode(lhs);
        auto [u2, a2] = decode(rhs);
        GfElement ea1 = field->element(a1);
        // (u1, a1)(u2, a2) = (u1 + a1^{-1} u2, a1 a2): the right additive
        // part is twisted by the inverse of the left multiplier.
        GfElement u = field->add(field->element(u1),
                                 field->mul(field->inv(ea1), field->element(u2)));
        GfElement a = field->mul(ea1, field->element(a2));
        return encode(field->index(u), field->index(a));
    };
    auto label = [field, decode](int idx) {
        auto [u_idx, a_idx] = decode(idx);
        return "(" + field->to_string(field->element(u_idx)) + ", " +
               field->to_string(field->element(a_idx)) + ")";
    };

    FiniteGroup group(order, 0, mul, label);
    group.check_axioms();

    // Connection set: the multiplicative copy {(0, a) : a != 1} plus the
    // involution alpha = (1, -1).
    const int one_idx = field->index(field->one());
    const int neg_one_idx = field->index(field->neg(field->one()));
    const int alpha = encode(one_idx, neg_one_idx);
    ConnectionSet s;
    for (int a_idx = 2; a_idx < qi; ++a_idx) s.members.push_back(encode(0, a_idx));
    s.members.push_back(alpha);
    std::sort(s.members.begin(), s.members.end());

    if (group.mul(alpha, alpha) != group.identity())
        throw Error("internal: adjoined element is not an involution");
    validate_connection_set(group, s);
    if (static_cast<int>(s.members.size()) != qi - 1)
        throw Error("internal: connection set size is not q - 1");
    return {std::move(group), std::move(s), alpha};
}

bool verify_isomorphism(const Graph& a, const Graph& b, const IsoCertificate& cert) {
    const int v = a.order();
    if (b.order() != v) return false;
    if (static_cast<int>(cert.mapping.size()) != v) return false;
    std::vector<char> seen(static_cast<std::size_t>(v), 0);
    for (int img : cert.mapping) {
        if (img < 0 || img >= v || seen[img]) return false;
        seen[img] = 1;
    }
    if (a.size() != b.size()) return false;
    for (int u = 0; u < v; ++u)
        for (int w = u + 1; w < v; ++w)
            if (a.adjacent(u, w) != b.adjacent(cert.mapping[u], cert.mapping[w]))
                return false;
    return true;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

std::optional<RecognitionResult> recognize_lb1(const Graph& g) {
    const int v = g.order();
    if (v == 0 || !g.is_regular()) return std::nullopt;
    const int n = g.degree(0) + 1;
    if (n < 4 || n > 63) return std::nullopt;
    if (v != n * (n - 1)) return std::nullopt;

    // Split edges: inside a clique two endpoints share a neighbor, across a
    // bridge they share none.
    std::vector<std::pair<int, int>> bridges;
    Dsu dsu(v);
    for (auto [x, y] : g.edges()) {
        if (common_neighbors(g, x, y).empty())
            bridges.emplace_back(x, y);
        else
            dsu.unite(x, y);
    }

    // The clique-internal components must be n cliques of size n - 1 each.
    std::unordered_map<int, int> comp_id;
    std::vector<std::vector<int>> comps;
    std::vector<int> comp_of(static_cast<std::size_t>(v));
    for (int x = 0; x < v; ++x) {
        int root = dsu.find(x);
        auto [it, fresh] = comp_id.try_emplace(root, static_cast<int>(comps.size()));
        if (fresh) comps.emplace_back();
        comp_of[x] = it->second;
        comps[it->second].push_back(x);
    }
    if (static_cast<int>(comps.size()) != n) return std::nullopt;
    for (const auto& comp : comps) {
        if (static_cast<int>(comp.size()) != n - 1) return std::nullopt;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (std::size_t j = i + 1; j < comp.size(); ++j)
                if (!g.adjacent(comp[i], comp[j])) return std::nullopt;
    }

    // Every vertex carries exactly one bridge, and every clique pair is
    // joined by exactly one bridge.
    std::vector<int> partner(static_cast<std::size_t>(v), -1);
    std::vector<std::vector<char>> pair_seen(
        static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (auto [x, y] : bridges) {
        if (partner[x] != -1 || partner[y] != -1) return std::nullopt;
        partner[x] = y;
        partner[y] = x;
        int cx = comp_of[x], cy = comp_of[y];
        if (cx == cy) return std::nullopt;
        if (pair_seen[cx][cy]) return std::nullopt;
        pair_seen[cx][cy] = pair_seen[cy][cx] = 1;
    }
    for (int x = 0; x < v; ++x)
        if (partner[x] == -1) return std::nullopt;

    // Label the anchor clique (the one holding vertex 0) as 1; the clique
    // bridged from the anchor's t-th smallest vertex becomes label t + 1.
    std::vector<int> label_of(static_cast<std::size_t>(n), 0);
    const int anchor = comp_of[0];
    label_of[anchor] = 1;
    std::vector<int> anchor_vertices = comps[anchor];
    std::sort(anchor_vertices.begin(), anchor_vertices.end());
    int next_label = 2;
    for (int x : anchor_vertices) {
        int reached = comp_of[partner[x]];
        if (label_of[reached] != 0) return std::nullopt;
        label_of[reached] = next_label++;
    }

    // A vertex in clique i whose bridge reaches clique j corresponds to the
    // containment edge ({i}, {i,j}) of B(n,1).
    const LayerParams params{n, 1};
    const LayerIndexing ix = layer_indexing(params);
    const Graph base = build_b(params);
    const LineGraphResult lg = line_graph(base);
    std::unordered_map<long long, int> edge_id;
    edge_id.reserve(lg.edges.size() * 2);
    for (const EdgeIndex& e : lg.edges)
        edge_id[static_cast<long long>(e.u) * base.order() + e.v] = e.id;

    IsoCertificate cert;
    cert.mapping.assign(static_cast<std::size_t>(v), -1);
    for (int x = 0; x < v; ++x) {
        int i = label_of[comp_of[x]];
        int j = label_of[comp_of[partner[x]]];
        int singleton = i - 1;  // weight-1 masks are indexed in element order
        std::uint64_t pair_mask =
            (std::uint64_t{1} << (i - 1)) | (std::uint64_t{1} << (j - 1));
        int pair_vertex = ix.index.at(pair_mask);
        auto it = edge_id.find(static_cast<long long>(singleton) * base.order() + pair_vertex);
        if (it == edge_id.end()) return std::nullopt;
        cert.mapping[x] = it->second;
    }
    if (!verify_isomorphism(g, lg.graph, cert)) return std::nullopt;
    return RecognitionResult{n, std::move(cert)};
}

CayleyVerdict is_cayley(const Graph& g, const SearchBudget& budget) {
    CayleyVerdict out;
    out.status = CayleyStatus::undecided;
    const int v = g.order();
    if (v == 0) {
        out.status = CayleyStatus::no;
        return out;
    }
    // Enumerate Aut(g) streaming, keeping only elements that could sit in a
    // regular subgroup: fixed-point-free with order dividing |V|.
    AutomorphismList aut;
    try {
        std::uint64_t count = 0;
        std::vector<VertexPermutation> candidates;
        for_each_automorphism(
            g,
            [&](const VertexPermutation& p) {
                ++count;
                const std::vector<int>& images = p.images();
                for (int i = 0; i < v; ++i)
                    if (images[i] == i) return;
                if (v % static_cast<long long>(p.order()) != 0) return;
                candidates.push_back(p);
            },
            budget);
        aut.order = count;
        aut.elements = std::move(candidates);
        out.aut_order = count;
    } catch (const BudgetExceeded&) {
        return out;
    }
    try {
        auto subgroup = regular_subgroup_search(aut, v, budget);
        if (subgroup.has_value()) {
            out.status = CayleyStatus::yes;
            out.subgroup = std::move(subgroup);
        } else {
            out.status = CayleyStatus::no;
        }
    } catch (const BudgetExceeded&) {
        // enumeration finished but the subgroup search did not: undecided
    }
    return out;
}

bool is_prime_power(long long n) {
    if (n < 2) return false;
    long long p = 0;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return true;  // n itself is prime
    while (n % p == 0) n /= p;
    return n == 1;
}

Classification classify_line_cayley(int n, int k) {
    validate(LayerParams{n, k});
    if (n == 2 * k + 1) {
        const bool power_of_two = (k & (k - 1)) == 0;
        if (k % 2 == 0 && !power_of_two)
            return {ClassificationStatus::non_cayley,
                    "n = 2k+1 with k even and not a power of 2"};
        return {ClassificationStatus::unresolved,
                "n = 2k+1 with k a power of 2 or k odd is not settled"};
    }
    if (k == 1) {
        if (is_prime_power(n))
            return {ClassificationStatus::cayley,
                    "k = 1 with n a prime power admits the field construction"};
        return {ClassificationStatus::non_cayley, "k = 1 and n is not a prime power"};
    }
    if (k == 2) {
        const long long q = n - 1;
        if (is_prime_power(q) && q % 4 == 3)
            return {ClassificationStatus::unresolved,
                    "k = 2 with n-1 a prime power congruent to 3 mod 4 is not settled"};
        return {ClassificationStatus::non_cayley,
                "k = 2 and n-1 is not a prime power congruent to 3 mod 4"};
    }
    if (k == 3) {
        if (n == 9 || n == 33)
            return {ClassificationStatus::unresolved,
                    "k = 3 with n in {9, 33} is not settled"};
        return {ClassificationStatus::non_cayley, "k = 3 and n is outside {9, 33}"};
    }
    return {ClassificationStatus::non_cayley, "k >= 4 with n != 2k+1"};
}

} // namespace layerline
