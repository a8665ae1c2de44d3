#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "layerline/graph.hpp"

namespace layerline {

using BigInt = boost::multiprecision::cpp_int;

// Exact binomial coefficient (0 for k < 0 or k > n).
BigInt binomial(int n, int k);

// A subset of {1, ..., n} stored as a bitmask: bit i-1 represents element i.
struct SubsetVertex {
    std::uint64_t mask = 0;
    int n = 0;
};

// Sorted element list, e.g. "{1,3,4}"; the empty set renders as "{}".
std::string subset_label(std::uint64_t mask);

// 0/1 membership string of length n; character i-1 is element i.
std::string chi(const SubsetVertex& v);

// Parameters of the two-layer graph B(n, k): vertices are the k- and
// (k+1)-subsets of {1,...,n}, edges are containments.
struct LayerParams {
    int n;
    int k;
};

// Throws ParamsOutOfRange unless 4 <= n <= 63 and 1 <= k < n/2.
void validate(const LayerParams& p);

// Vertex numbering used by every layer operation: all weight-k masks in
// ascending numeric (= colex) order, then all weight-(k+1) masks the same
// way.
struct LayerIndexing {
    LayerParams params;
    std::vector<std::uint64_t> masks;               // vertex id -> mask
    std::unordered_map<std::uint64_t, int> index;   // mask -> vertex id
    int layer_size;                                 // number of weight-k vertices
};

LayerIndexing layer_indexing(const LayerParams& p);

// B(n, k) with subset labels.  Throws BudgetExceeded beyond the practical
// vertex bound (the construction is meant for desk-scale instances).
Graph build_b(const LayerParams& p);

// The n-dimensional hypercube on all 2^n masks, 1 <= n <= 20.
Graph build_hypercube(int n);

struct LayerCounts {
    BigInt vertices;       // C(n,k) + C(n,k+1)
    BigInt edges;          // (n-k) * C(n,k)
    BigInt line_vertices;  // = edges
};

// Closed-form counts; exact for every valid (n, k).
LayerCounts counts(const LayerParams& p);

struct DivisibilityCheck {
    BigInt value;        // C(2k+1, k)
    int remainder_mod_4;
    bool multiple_of_4;
};

// C(2k+1, k) mod 4 for even k > 2.  Throws ParamsOutOfRange otherwise.
DivisibilityCheck middle_binomial_mod4(int k);

} // namespace layerline
