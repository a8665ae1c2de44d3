#include "layerline/induced.hpp"

#include <unordered_map>

namespace layerline {

VertexPermutation induced_vertex_action(const AutElement& a, const LayerIndexing& ix) {
    const LayerParams& p = ix.params;
    if (a.perm.degree() != p.n)
        throw PreconditionViolated("ground permutation degree differs from n");
    if (a.comp && p.n != 2 * p.k + 1)
        throw CompNotApplicable("complementation swaps layers only when n = 2k+1");
    std::uint64_t full = (p.n >= 64) ? ~std::uint64_t{0}
                                     : ((std::uint64_t{1} << p.n) - 1);
    std::vector<int> images(ix.masks.size());
    for (std::size_t i = 0; i < ix.masks.size(); ++i) {
        std::uint64_t m = a.perm.apply_to_mask(ix.masks[i]);
        if (a.comp) m = full & ~m;
        images[i] = ix.index.at(m);
    }
    return VertexPermutation(std::move(images));
}

bool is_automorphism(const Graph& g, const VertexPermutation& vp) {
    if (vp.degree() != g.order()) return false;
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u))
            if (!g.adjacent(vp(u), vp(v))) return false;
    return true;  // a bijection preserving all edges also preserves non-edges
}

VertexPermutation induced_line_automorphism(const VertexPermutation& vp,
                                            const Graph& g,
                                            const std::vector<EdgeIndex>& edges) {
    if (!is_automorphism(g, vp))
        throw NotAutomorphism("map does not preserve adjacency of the base graph");
    std::unordered_map<std::uint64_t, int> edge_id;
    edge_id.reserve(edges.size());
    auto key = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        return static_cast<std::uint64_t>(u) * g.order() + v;
    };
    for (const auto& e : edges) edge_id.emplace(key(e.u, e.v), e.id);
    std::vector<int> images(edges.size());
    for (const auto& e : edges) images[e.id] = edge_id.at(key(vp(e.u), vp(e.v)));
    return VertexPermutation(std::move(images));
}

} // namespace layerline
