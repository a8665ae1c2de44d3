#pragma once

#include <string>

#include "layerline/graph.hpp"

namespace layerline {

// graph6 encoding of an undirected simple graph (canonical form, no
// ">>graph6<<" header, no trailing newline).  Supports any order the
// format supports.
std::string to_graph6(const Graph& g);

// Inverse of to_graph6.  Tolerates an optional ">>graph6<<" header and
// trailing whitespace/newline.  Throws Error on malformed input.
Graph from_graph6(const std::string& text);

// Graphviz "graph" document.  Vertex ids are stable; labels are attached
// when present.
std::string to_dot(const Graph& g);

// JSON object {"order": n, "edges": [[u,v],...], "labels": [...]} with
// edges sorted lexicographically.  "labels" is omitted for unlabeled
// graphs.
std::string to_json(const Graph& g);

// Inverse of to_json.
Graph from_json(const std::string& text);

} // namespace layerline
