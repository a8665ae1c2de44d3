#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "layerline/errors.hpp"

namespace layerline {

// Immutable simple undirected graph on dense 0-based vertex indices.
// Neighbor lists are kept sorted strictly ascending; symmetry and
// loop-freeness are enforced at construction.
class Graph {
public:
    Graph() = default;

    // Each pair {u, v} is one undirected edge.  Throws InvalidGraph on a
    // loop, a duplicate edge, or an endpoint outside [0, order).
    Graph(int order, const std::vector<std::pair<int, int>>& edge_list,
          std::vector<std::string> labels = {});

    int order() const { return static_cast<int>(adj_.size()); }
    std::size_t size() const { return edge_count_; }

    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool adjacent(int u, int v) const;

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(int v) const;
    const std::vector<std::string>& labels() const { return labels_; }

    // All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool is_regular() const;

private:
    void check_vertex(int v) const;

    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
    std::size_t edge_count_ = 0;
};

// One row of the line-graph vertex table: line vertex `id` is the edge
// {u, v} of the base graph, with u < v.
struct EdgeIndex {
    int id;
    int u;
    int v;
};

struct LineGraphResult {
    Graph graph;                   // the line graph
    std::vector<EdgeIndex> edges;  // line vertex id -> base edge
};

// Line graph: one vertex per edge of g, adjacent iff the edges share an
// endpoint.  Vertex ids follow the lexicographic order of (u, v) pairs.
// If g is labeled, line vertices are labeled "ulabel|vlabel".
LineGraphResult line_graph(const Graph& g);

// BFS distances from source; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

bool is_connected(const Graph& g);

// Maximum eccentricity over all vertices.  Throws Disconnected.
int diameter(const Graph& g);

struct Bipartition {
    std::vector<int> part_a;  // contains vertex 0
    std::vector<int> part_b;
};

// Two-coloring of a connected graph.  Throws Disconnected or OddCycle.
Bipartition bipartition(const Graph& g);

// Sorted list of common neighbors.  Throws IndexOutOfRange.
std::vector<int> common_neighbors(const Graph& g, int u, int v);

} // namespace layerline
