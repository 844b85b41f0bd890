#pragma once

#include "polardrg/graph.hpp"

#include "json.hpp"
#include <string>

namespace polardrg {

/// Standard graph6 encoding (no trailing newline, no ">>graph6<<" header).
std::string to_graph6(const Graph& g);

/// Native form {"labels": [...], "edges": [[u, v], ...]} with u < v.
nlohmann::json to_json(const Graph& g);
/// Throws ParseError on malformed input.
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IntersectionArray& arr);

} // namespace polardrg
