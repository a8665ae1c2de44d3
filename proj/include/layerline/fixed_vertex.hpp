#pragma once

#include "layerline/layer_graphs.hpp"
#include "layerline/perm.hpp"

namespace layerline {

// A line vertex {u, w} of L(B(n, k)) fixed by the action of an involution
// theta, produced constructively (no search).
struct FixedVertexResult {
    SubsetVertex u;       // k-subset, theta-invariant
    SubsetVertex w;       // u plus one theta-fixed point, so theta fixes {u, w}
    int extra_element;    // the 1-based element added to u (largest fixed point)
    int transpositions;   // a: number of 2-cycles of theta
    int fixed_count;      // b: number of fixed points of theta (odd)
    bool used_case_two;   // true when 2a > k (u built from k/2 transpositions)
};

// Requires theta to be a non-identity involution of {1,...,n} with
// n = 2k+1 and k even; throws PreconditionViolated otherwise.
//
// Writing theta as a transpositions and b fixed points (2a + b = n, b odd):
//  - if 2a <= k: u = all transposition supports plus the k - 2a smallest
//    fixed points;
//  - if 2a > k: u = the supports of the k/2 transpositions with the
//    smallest minima.
// In both cases w = u + the largest fixed point, which never lies in u, so
// theta fixes u and w setwise and hence fixes the line vertex {u, w}.
FixedVertexResult fixed_vertex_for_involution(const Permutation& theta,
                                              const LayerParams& p);

} // namespace layerline
