#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "layerline/graph.hpp"
#include "layerline/perm.hpp"

namespace layerline {

// Budget knobs shared by the backtracking searches.  Exceeding any of them
// raises BudgetExceeded rather than returning a partial answer.
struct SearchBudget {
    std::uint64_t max_nodes = 100'000'000;  // backtrack nodes / closure products
    int max_graph_order = 250;              // automorphism search size cap
};

// Invokes fn for every automorphism of g, in a deterministic order.  The
// search refines vertices by (degree, distance histogram) signatures and
// then backtracks over color-respecting assignments.
void for_each_automorphism(const Graph& g,
                           const std::function<void(const VertexPermutation&)>& fn,
                           const SearchBudget& budget = {});

struct AutGroup {
    std::uint64_t order;
    std::vector<VertexPermutation> generators;  // closure re-verified = order
};

// Full automorphism group by exhaustive backtracking.  Returns the order
// and a small generating set whose closure is re-verified against the
// enumeration count.
AutGroup automorphism_group(const Graph& g, const SearchBudget& budget = {});

} // namespace layerline
