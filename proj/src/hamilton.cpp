#include "layerline/hamilton.hpp"

#include <algorithm>
#include <utility>

#include "layerline/errors.hpp"

namespace layerline {

std::vector<int> euler_circuit(const Graph& g) {
    const int order = g.order();
    if (order == 0) return {};
    for (int v = 0; v < order; ++v)
        if (g.degree(v) % 2 != 0) throw NotEulerian("vertex of odd degree");
    if (!is_connected(g)) throw Disconnected("graph is not connected");
    if (g.size() == 0) return {};

    // Incidence lists in ascending edge-id order (edge ids are already
    // lexicographic by endpoints).
    std::vector<std::vector<std::pair<int, int>>> incidence(static_cast<std::size_t>(order));
    {
        const auto edges = g.edges();
        for (int id = 0; id < static_cast<int>(edges.size()); ++id) {
            auto [u, v] = edges[static_cast<std::size_t>(id)];
            incidence[u].emplace_back(id, v);
            incidence[v].emplace_back(id, u);
        }
    }

    // Hierholzer, iterative: walk greedily over the lowest unused edge,
    // emit an edge when its branch retreats.
    std::vector<std::size_t> next(static_cast<std::size_t>(order), 0);
    std::vector<char> used(g.size(), 0);
    std::vector<std::pair<int, int>> stack;  // (vertex, edge entered through)
    stack.emplace_back(0, -1);
    std::vector<int> circuit;
    circuit.reserve(g.size());
    while (!stack.empty()) {
        const int v = stack.back().first;
        bool advanced = false;
        while (next[v] < incidence[v].size()) {
            auto [id, w] = incidence[v][next[v]++];
            if (used[id]) continue;
            used[id] = 1;
            stack.emplace_back(w, id);
            advanced = true;
            break;
        }
        if (!advanced) {
            if (stack.back().second >= 0) circuit.push_back(stack.back().second);
            stack.pop_back();
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    if (circuit.size() != g.size())
        throw Error("internal: circuit does not cover every edge");
    return circuit;
}

std::vector<int> hamiltonian_cycle_of_line_graph(const Graph& g) {
    std::vector<int> cycle = euler_circuit(g);
    const LineGraphResult lg = line_graph(g);
    if (!validate_cycle(lg.graph, cycle))
        throw Error("internal: circuit is not a Hamiltonian cycle of the line graph");
    return cycle;
}

bool validate_cycle(const Graph& l, const std::vector<int>& cycle) {
    const int order = l.order();
    if (static_cast<int>(cycle.size()) != order) return false;
    if (order == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(order), 0);
    for (int v : cycle) {
        if (v < 0 || v >= order || seen[v]) return false;
        seen[v] = 1;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        int a = cycle[i];
        int b = cycle[(i + 1) % cycle.size()];
        if (!l.adjacent(a, b)) return false;
    }
    return true;
}

} // namespace layerline
