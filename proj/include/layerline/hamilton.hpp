#pragma once

#include <vector>

#include "layerline/graph.hpp"

namespace layerline {

// Closed trail through every edge of g exactly once, as a cyclic sequence
// of edge ids (ids follow the lexicographic edge order, matching line-graph
// vertex ids).  Deterministic: starts at vertex 0 and always takes the
// lowest unused edge id.  Throws NotEulerian on an odd-degree vertex and
// Disconnected when g is not connected.
std::vector<int> euler_circuit(const Graph& g);

// The Euler circuit of g read as a vertex cycle of the line graph L(g):
// every line vertex appears exactly once and cyclically consecutive
// entries are adjacent in L(g).  Validated before returning.
std::vector<int> hamiltonian_cycle_of_line_graph(const Graph& g);

// True iff cycle visits every vertex of l exactly once and every
// cyclically consecutive pair is an edge of l.
bool validate_cycle(const Graph& l, const std::vector<int>& cycle);

} // namespace layerline
