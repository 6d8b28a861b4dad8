#pragma once

#include <istream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hoffgraph/graph.hpp"

namespace hoffgraph {

enum class GraphFormat { edge_list, json, graph6 };

/// "n m" header followed by m lines "u v" with u < v.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::istream& in);

/// {"order": n, "edges": [[u, v], ...]}
nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// graph6: size prefix, then the upper triangle column by column
/// (x01, x02, x12, x03, ...) in 6-bit groups offset by 63.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

std::string format_graph(const Graph& g, GraphFormat fmt);
/// Sniffs the format when `fmt` is empty: '{' starts JSON, a line of two
/// integers starts an edge list, anything else is graph6.
Graph parse_graph(std::string_view text, std::optional<GraphFormat> fmt = std::nullopt);
Graph read_graph_file(const std::string& path, std::optional<GraphFormat> fmt = std::nullopt);

GraphFormat parse_graph_format(std::string_view name);

}  // namespace hoffgraph
