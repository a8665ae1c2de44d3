#include "layerline/serialize.hpp"

#include <cstdint>
#include <sstream>

#include <nlohmann/json.hpp>

namespace layerline {

namespace {

// Number encoding N(n): one byte for n <= 62, "~" + 3 bytes for
// n <= 258047, "~~" + 6 bytes beyond, every byte offset by 63.
void append_graph6_order(std::string& out, std::int64_t n) {
    if (n < 0) throw Error("graph6: negative order");
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else if (n <= 68719476735LL) {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        throw Error("graph6: order too large");
    }
}

std::int64_t parse_graph6_order(const std::string& s, std::size_t& pos) {
    auto byte = [&](std::size_t i) -> std::int64_t {
        if (i >= s.size()) throw Error("graph6: truncated order");
        std::int64_t b = static_cast<unsigned char>(s[i]);
        if (b < 63 || b > 126) throw Error("graph6: byte out of range");
        return b - 63;
    };
    if (byte(pos) != 63) return byte(pos++);
    ++pos;
    int count = 3;
    if (byte(pos) == 63) {  // "~~" prefix
        ++pos;
        count = 6;
    }
    std::int64_t n = 0;
    for (int i = 0; i < count; ++i) n = (n << 6) | byte(pos++);
    return n;
}

} // namespace

std::string to_graph6(const Graph& g) {
    std::string out;
    append_graph6_order(out, g.order());
    int bit = 0;
    int acc = 0;
    for (int v = 1; v < g.order(); ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++bit == 6) {
                out.push_back(static_cast<char>(acc + 63));
                bit = 0;
                acc = 0;
            }
        }
    }
    if (bit > 0) out.push_back(static_cast<char>((acc << (6 - bit)) + 63));
    return out;
}

Graph from_graph6(const std::string& text) {
    std::string s = text;
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s.erase(0, header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
        s.pop_back();
    if (s.empty()) throw Error("graph6: empty input");
    std::size_t pos = 0;
    std::int64_t n64 = parse_graph6_order(s, pos);
    if (n64 > (1 << 22)) throw Error("graph6: order beyond practical bound");
    int n = static_cast<int>(n64);
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    int acc = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (bit == 0) {
                if (pos >= s.size()) throw Error("graph6: truncated bit vector");
                int b = static_cast<unsigned char>(s[pos++]);
                if (b < 63 || b > 126) throw Error("graph6: byte out of range");
                acc = b - 63;
                bit = 6;
            }
            --bit;
            if ((acc >> bit) & 1) edges.emplace_back(u, v);
        }
    }
    if (pos != s.size()) throw Error("graph6: trailing bytes");
    return Graph(n, edges);
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (g.has_labels()) out << " [label=\"" << g.label(v) << "\"]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["order"] = g.order();
    auto& edges = j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    if (g.has_labels()) j["labels"] = g.labels();
    return j.dump(2) + "\n";
}

Graph from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("bad graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("order") || !j.contains("edges"))
        throw Error("bad graph JSON: missing order/edges");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw Error("bad graph JSON: edge shape");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    return Graph(j["order"].get<int>(), edges, std::move(labels));
}

} // namespace layerline
