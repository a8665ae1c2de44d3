#pragma once

#include <cstdint>
#include <vector>

#include "layerline/aut_search.hpp"
#include "layerline/perm.hpp"

namespace layerline {

// Size of the orbit of `start` in {0, ..., domain-1} under the group
// generated by `generators` (each of degree `domain`).
std::uint64_t orbit_size(int start, const std::vector<Permutation>& generators,
                         int domain);

// Single orbit on unordered k-subsets of {0, ..., n-1}?  Throws
// BudgetExceeded if C(n, k) exceeds budget.max_nodes.
bool is_k_homogeneous(const std::vector<Permutation>& generators, int n, int k,
                      const SearchBudget& budget = {});

// Single orbit on ordered k-tuples of distinct points?
bool is_k_transitive(const std::vector<Permutation>& generators, int n, int k,
                     const SearchBudget& budget = {});

} // namespace layerline
