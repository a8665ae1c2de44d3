#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "layerline/aut_search.hpp"
#include "layerline/group.hpp"
#include "layerline/perm.hpp"

namespace layerline {

// A fully enumerated automorphism group acting on {0, ..., degree-1}.
struct AutomorphismList {
    std::uint64_t order = 0;
    std::vector<VertexPermutation> elements;
};

// Searches `aut` for a subgroup of order v_count acting regularly on the
// v_count points.  Only fixed-point-free elements whose order divides
// v_count can participate, so the search backtracks over those, growing a
// closed subgroup until the orbit of point 0 covers everything.  The
// search is exhaustive: std::nullopt means no regular subgroup exists.
// Throws BudgetExceeded when the node budget runs out before either
// outcome.  Every hit is re-verified (order, transitivity, semiregularity)
// before being returned.
std::optional<FiniteGroup> regular_subgroup_search(const AutomorphismList& aut,
                                                   int v_count,
                                                   const SearchBudget& budget = {});

} // namespace layerline
