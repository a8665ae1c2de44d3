#include "layerline/fixed_vertex.hpp"

#include <algorithm>

namespace layerline {

FixedVertexResult fixed_vertex_for_involution(const Permutation& theta,
                                              const LayerParams& p) {
    validate(p);
    if (p.n != 2 * p.k + 1)
        throw PreconditionViolated("fixed-vertex construction requires n = 2k+1");
    if (p.k % 2 != 0)
        throw PreconditionViolated("fixed-vertex construction requires even k");
    if (theta.degree() != p.n)
        throw PreconditionViolated("involution degree differs from n");
    if (theta.is_identity())
        throw PreconditionViolated("theta must not be the identity");
    if (!theta.compose(theta).is_identity())
        throw PreconditionViolated("theta is not an involution");

    // Split {0,...,n-1} into transposition supports and fixed points; both
    // lists are ascending, transpositions ordered by their smaller element.
    std::vector<std::pair<int, int>> transpositions;
    std::vector<int> fixed;
    for (int i = 0; i < p.n; ++i) {
        int j = theta(i);
        if (j == i)
            fixed.push_back(i);
        else if (i < j)
            transpositions.emplace_back(i, j);
    }
    int a = static_cast<int>(transpositions.size());
    int b = static_cast<int>(fixed.size());

    std::uint64_t u = 0;
    bool case_two = 2 * a > p.k;
    if (!case_two) {
        for (auto [i, j] : transpositions)
            u |= (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
        int t = p.k - 2 * a;  // leaves b - t = k + 1 fixed points unused
        for (int idx = 0; idx < t; ++idx) u |= std::uint64_t{1} << fixed[idx];
    } else {
        int m = p.k / 2;  // 2a > k = 2m means at least m+1 transpositions exist
        for (int idx = 0; idx < m; ++idx) {
            auto [i, j] = transpositions[idx];
            u |= (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
        }
    }

    // The largest fixed point is never consumed above: case one uses only
    // the t smallest of b > t fixed points, case two uses none.
    int extra = fixed.back();
    std::uint64_t w = u | (std::uint64_t{1} << extra);

    // theta permutes u within itself (complete transpositions plus fixed
    // points) and fixes extra, so the line vertex {u, w} is fixed.
    if (theta.apply_to_mask(u) != u || theta.apply_to_mask(w) != w)
        throw Error("internal: constructed vertex is not theta-invariant");

    return {{u, p.n}, {w, p.n}, extra + 1, a, b, case_two};
}

} // namespace layerline
