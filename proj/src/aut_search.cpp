#include "layerline/aut_search.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace layerline {

namespace {

// Iterated refinement: start from (degree, distance histogram) and split
// classes by multisets of neighbor colors until stable.
std::vector<int> stable_coloring(const Graph& g) {
    int n = g.order();
    std::vector<int> color(n, 0);
    {
        std::map<std::vector<int>, std::vector<int>> classes;
        for (int v = 0; v < n; ++v) {
            auto dist = bfs_distances(g, v);
            std::vector<int> histogram(static_cast<std::size_t>(n) + 1, 0);
            for (int d : dist) ++histogram[d < 0 ? n : d];
            histogram.push_back(g.degree(v));
            classes[histogram].push_back(v);
        }
        int c = 0;
        for (const auto& [sig, members] : classes) {
            for (int v : members) color[v] = c;
            ++c;
        }
    }
    for (;;) {
        std::map<std::pair<int, std::vector<int>>, std::vector<int>> classes;
        for (int v = 0; v < n; ++v) {
            std::vector<int> around;
            around.reserve(g.neighbors(v).size());
            for (int w : g.neighbors(v)) around.push_back(color[w]);
            std::sort(around.begin(), around.end());
            classes[{color[v], std::move(around)}].push_back(v);
        }
        std::vector<int> next(n);
        int c = 0;
        for (const auto& [sig, members] : classes) {
            for (int v : members) next[v] = c;
            ++c;
        }
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

struct SearchContext {
    const Graph& g;
    int n;
    int words;
    // Pair classes: two vertex pairs can correspond under an automorphism
    // only if they agree on (BFS distance, common-neighbor count), so each
    // observed value pair becomes a class.  pair_row(y, c) is the bitset
    // {x : class(y, x) == c}.
    int classes = 0;
    std::vector<int> pair_class;           // n*n class ids
    std::vector<std::uint64_t> pair_sets;  // n*classes bitset rows
    const std::function<void(const VertexPermutation&)>& fn;
    std::uint64_t budget;
    std::uint64_t nodes = 0;

    // cand[v] (a words-long slice) is the running candidate set of each
    // unplaced vertex; one full snapshot per depth supports backtracking.
    std::vector<std::uint64_t> cand;
    std::vector<std::uint64_t> saved;  // depth-major snapshots
    std::vector<char> placed;
    std::vector<int> image;

    const std::uint64_t* pair_row(int y, int cls) const {
        return &pair_sets[(static_cast<std::size_t>(y) * classes + cls) * words];
    }
    std::uint64_t* cand_row(int v) { return &cand[static_cast<std::size_t>(v) * words]; }

    SearchContext(const Graph& graph,
                  const std::function<void(const VertexPermutation&)>& callback,
                  const SearchBudget& b)
        : g(graph), n(graph.order()), words((graph.order() + 63) / 64), fn(callback),
          budget(b.max_nodes) {
        // adjacency bit rows, used to count common neighbors by popcount
        std::vector<std::uint64_t> adj(static_cast<std::size_t>(n) * words, 0);
        for (int u = 0; u < n; ++u)
            for (int v : g.neighbors(u))
                adj[static_cast<std::size_t>(u) * words + v / 64] |= std::uint64_t{1}
                                                                     << (v % 64);

        std::vector<int> dist(static_cast<std::size_t>(n) * n, -1);
        for (int v = 0; v < n; ++v) {
            auto row = bfs_distances(g, v);
            for (int u = 0; u < n; ++u) dist[static_cast<std::size_t>(v) * n + u] = row[u];
        }

        pair_class.assign(static_cast<std::size_t>(n) * n, 0);
        std::map<std::pair<int, int>, int> class_of;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                int cn = 0;
                const std::uint64_t* ru = &adj[static_cast<std::size_t>(u) * words];
                const std::uint64_t* rv = &adj[static_cast<std::size_t>(v) * words];
                for (int w = 0; w < words; ++w) cn += std::popcount(ru[w] & rv[w]);
                std::pair<int, int> key(dist[static_cast<std::size_t>(u) * n + v], cn);
                auto [it, fresh] = class_of.try_emplace(key, static_cast<int>(class_of.size()));
                pair_class[static_cast<std::size_t>(u) * n + v] = it->second;
            }
        classes = static_cast<int>(class_of.size());
        pair_sets.assign(static_cast<std::size_t>(n) * classes * words, 0);
        for (int y = 0; y < n; ++y)
            for (int x = 0; x < n; ++x) {
                int cls = pair_class[static_cast<std::size_t>(y) * n + x];
                pair_sets[(static_cast<std::size_t>(y) * classes + cls) * words + x / 64] |=
                    std::uint64_t{1} << (x % 64);
            }

        // initial candidate sets: the refinement classes
        std::vector<int> color = stable_coloring(g);
        int colors = n == 0 ? 0 : 1 + *std::max_element(color.begin(), color.end());
        std::vector<std::uint64_t> color_mask(static_cast<std::size_t>(colors) * words, 0);
        for (int v = 0; v < n; ++v)
            color_mask[static_cast<std::size_t>(color[v]) * words + v / 64] |=
                std::uint64_t{1} << (v % 64);
        cand.assign(static_cast<std::size_t>(n) * words, 0);
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < words; ++w)
                cand[static_cast<std::size_t>(v) * words + w] =
                    color_mask[static_cast<std::size_t>(color[v]) * words + w];

        saved.assign(static_cast<std::size_t>(n + 1) * n * words, 0);
        placed.assign(static_cast<std::size_t>(n), 0);
        image.assign(static_cast<std::size_t>(n), -1);
    }

    // Fail-first: among unplaced vertices pick the one with the fewest
    // candidates (ties by index), so forced assignments chain immediately
    // and contradictions surface at once.
    void recurse(int depth) {
        if (++nodes > budget)
            throw BudgetExceeded("automorphism search exceeded the node budget");
        if (depth == n) {
            fn(VertexPermutation(image));
            return;
        }
        int v = -1, best = n + 1;
        for (int u = 0; u < n; ++u) {
            if (placed[u]) continue;
            int count = 0;
            const std::uint64_t* row = cand_row(u);
            for (int w = 0; w < words && count < best; ++w) count += std::popcount(row[w]);
            if (count < best) {
                best = count;
                v = u;
                if (best == 0) return;  // some vertex has no image: dead branch
            }
        }
        std::uint64_t* snapshot = &saved[static_cast<std::size_t>(depth) * n * words];
        const std::uint64_t* vrow = cand_row(v);
        placed[v] = 1;
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = vrow[w];
            while (bits) {
                const int b = std::countr_zero(bits);
                bits &= bits - 1;
                const int x = w * 64 + b;
                std::copy(cand.begin(), cand.end(), snapshot);
                // x is taken, and every unplaced vertex u must map into the
                // pair class of (v, u) relative to x
                bool dead = false;
                for (int u = 0; u < n; ++u) {
                    if (placed[u]) continue;
                    std::uint64_t* urow = cand_row(u);
                    const std::uint64_t* crow =
                        pair_row(x, pair_class[static_cast<std::size_t>(v) * n + u]);
                    for (int t = 0; t < words; ++t) urow[t] &= crow[t];
                    urow[x / 64] &= ~(std::uint64_t{1} << (x % 64));
                    std::uint64_t any = 0;
                    for (int t = 0; t < words; ++t) any |= urow[t];
                    if (!any) {
                        dead = true;
                        break;
                    }
                }
                if (!dead) {
                    image[v] = x;
                    recurse(depth + 1);
                    image[v] = -1;
                }
                std::copy(snapshot, snapshot + static_cast<std::size_t>(n) * words,
                          cand.begin());
            }
        }
        placed[v] = 0;
    }
};

} // namespace

void for_each_automorphism(const Graph& g,
                           const std::function<void(const VertexPermutation&)>& fn,
                           const SearchBudget& budget) {
    if (g.order() > budget.max_graph_order)
        throw BudgetExceeded("graph too large for exhaustive automorphism search");
    if (g.order() == 0) {
        fn(VertexPermutation(0));
        return;
    }
    SearchContext ctx(g, fn, budget);
    ctx.recurse(0);
}

AutGroup automorphism_group(const Graph& g, const SearchBudget& budget) {
    AutGroup result{0, {}};
    std::set<VertexPermutation> closure;
    for_each_automorphism(
        g,
        [&](const VertexPermutation& p) {
            ++result.order;
            if (closure.empty()) closure.insert(VertexPermutation(g.order()));
            if (!closure.contains(p)) {
                result.generators.push_back(p);
                closure.clear();
                for (const auto& q : generate_group(result.generators))
                    closure.insert(q);
            }
        },
        budget);
    if (closure.size() != result.order)
        throw Error("internal: generator closure does not match enumeration");
    return result;
}

} // namespace layerline
