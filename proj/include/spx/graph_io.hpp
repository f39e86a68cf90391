#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "spx/graph.hpp"

namespace spx {

/// Standard graph6 encoding (no ">>graph6<<" header, no trailing newline).
std::string graph6_encode(const Graph& g);
/// Accepts an optional ">>graph6<<" header and trailing whitespace. Throws FormatError.
Graph graph6_decode(std::string_view text);

/// DOT with vertices 0..n-1 declared in order and each edge u -- v (u < v) once.
std::string to_dot(const Graph& g, std::string_view name = "G");

/// {"n": n, "edges": [[u, v], ...]} with u < v, edges sorted lexicographically.
nlohmann::json to_edge_list_json(const Graph& g);
Graph from_edge_list_json(const nlohmann::json& doc);

/// Parses either an edge-list JSON document or a graph6 line.
Graph parse_graph(std::string_view text);

}  // namespace spx
