#pragma once

#include "layerline/graph.hpp"
#include "layerline/layer_graphs.hpp"
#include "layerline/perm.hpp"

namespace layerline {

// A permutation of the vertex indices of some fixed graph.

// An abstract automorphism of B(n, k): a permutation of the ground set
// {1,...,n} optionally followed by set complementation.  Complementation
// only maps the two layers onto each other when n = 2k + 1.
struct AutElement {
    Permutation perm;   // degree n
    bool comp = false;
};

// Action of `a` on the vertices of B(n, k) under the canonical vertex
// numbering: a subset-mask S maps to perm(S), then to its complement when
// comp is set.  Throws CompNotApplicable when comp is used with
// n != 2k + 1, and PreconditionViolated on a degree mismatch.
VertexPermutation induced_vertex_action(const AutElement& a, const LayerIndexing& ix);

// Lifts an automorphism of g to the line graph: edge {u, v} maps to
// {vp(u), vp(v)}.  Verifies that vp preserves adjacency of g and throws
// NotAutomorphism otherwise.  `edges` is the line-vertex table of g.
VertexPermutation induced_line_automorphism(const VertexPermutation& vp,
                                            const Graph& g,
                                            const std::vector<EdgeIndex>& edges);

// True iff vp maps edges of g exactly onto edges.
bool is_automorphism(const Graph& g, const VertexPermutation& vp);

} // namespace layerline
