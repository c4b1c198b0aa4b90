#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "arbor/exact.hpp"
#include "arbor/graph.hpp"

namespace arbor {

/// {"n": int, "edges": [[u, v], ...], "labels": [...]} with labels optional.
nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// Exact rationals serialize as {"num": int, "den": int}. Components that do
/// not fit in 64 bits are written as decimal strings.
nlohmann::json to_json(const ExactRatio& r);
ExactRatio ratio_from_json(const nlohmann::json& j);

/// graph6 interchange format (no header line, no trailing newline).
std::string to_graph6(const Graph& g);
Graph graph_from_graph6(std::string_view text);

/// Accepts either format: JSON when the first non-blank byte is '{',
/// graph6 otherwise (an optional ">>graph6<<" header is skipped).
Graph parse_graph(std::string_view text);

}  // namespace arbor
