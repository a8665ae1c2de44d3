#include "layerline/graph.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

namespace layerline {

Graph::Graph(int order, const std::vector<std::pair<int, int>>& edge_list,
             std::vector<std::string> labels)
    : adj_(order >= 0 ? static_cast<std::size_t>(order)
                      : throw ParamsOutOfRange("graph order must be non-negative")),
      labels_(std::move(labels)) {
    if (!labels_.empty() && static_cast<int>(labels_.size()) != order)
        throw InvalidGraph("label count does not match vertex count");
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= order || v < 0 || v >= order)
            throw InvalidGraph("edge endpoint out of range");
        if (u == v) throw InvalidGraph("loops are not allowed");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            throw InvalidGraph("duplicate edge");
    }
    edge_count_ = edge_list.size();
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= order()) throw IndexOutOfRange("vertex index out of range");
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

const std::string& Graph::label(int v) const {
    check_vertex(v);
    if (labels_.empty()) throw Error("graph has no labels");
    return labels_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < order(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;  // already lexicographically sorted by construction
}

bool Graph::is_regular() const {
    for (int v = 1; v < order(); ++v)
        if (adj_[v].size() != adj_[0].size()) return false;
    return true;
}

LineGraphResult line_graph(const Graph& g) {
    std::vector<EdgeIndex> table;
    table.reserve(g.size());
    // incident[v] lists the line-vertex ids of edges at v, ascending.
    std::vector<std::vector<int>> incident(g.order());
    for (auto [u, v] : g.edges()) {
        int id = static_cast<int>(table.size());
        table.push_back({id, u, v});
        incident[u].push_back(id);
        incident[v].push_back(id);
    }
    std::vector<std::pair<int, int>> line_edges;
    for (int v = 0; v < g.order(); ++v) {
        const auto& ids = incident[v];
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = i + 1; j < ids.size(); ++j)
                line_edges.emplace_back(std::min(ids[i], ids[j]),
                                        std::max(ids[i], ids[j]));
    }
    // Two distinct edges of a simple graph share at most one endpoint, so
    // every line edge was generated exactly once.
    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels.reserve(table.size());
        for (const auto& e : table) labels.push_back(g.label(e.u) + "|" + g.label(e.v));
    }
    return {Graph(static_cast<int>(table.size()), line_edges, std::move(labels)),
            std::move(table)};
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    if (source < 0 || source >= g.order())
        throw IndexOutOfRange("BFS source out of range");
    std::vector<int> dist(g.order(), -1);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    auto dist = bfs_distances(g, 0);
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

int diameter(const Graph& g) {
    if (g.order() == 0) throw Disconnected("diameter of the empty graph is undefined");
    int best = 0;
    for (int v = 0; v < g.order(); ++v) {
        auto dist = bfs_distances(g, v);
        for (int d : dist) {
            if (d < 0) throw Disconnected("graph is not connected");
            best = std::max(best, d);
        }
    }
    return best;
}

Bipartition bipartition(const Graph& g) {
    if (g.order() == 0) return {};
    std::vector<int> side(g.order(), -1);
    std::queue<int> q;
    side[0] = 0;
    q.push(0);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (side[w] < 0) {
                side[w] = 1 - side[v];
                q.push(w);
            } else if (side[w] == side[v]) {
                throw OddCycle("graph contains an odd cycle");
            }
        }
    }
    Bipartition parts;
    for (int v = 0; v < g.order(); ++v) {
        if (side[v] < 0) throw Disconnected("graph is not connected");
        (side[v] == 0 ? parts.part_a : parts.part_b).push_back(v);
    }
    return parts;
}

std::vector<int> common_neighbors(const Graph& g, int u, int v) {
    const auto& a = g.neighbors(u);
    const auto& b = g.neighbors(v);
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

} // namespace layerline
