#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "arbor/graph.hpp"

namespace arbor {

/// Names accepted by generate_family, sorted.
std::vector<std::string> family_names();

/// Builds a graph from a family name and a JSON object of integer parameters,
/// e.g. ("torus", {"m": 4, "n": 4}). The "complex" family takes
/// {"facets": [[...], ...]} and returns its barycentric refinement graph.
/// Throws InputError for unknown families and missing or bad parameters.
Graph generate_family(const std::string& family, const nlohmann::json& params);

/// generate_family followed by `refine` barycentric refinements, then the
/// optional "remove" (delete one vertex) and "isolated" (add isolated vertices).
Graph generate_from_spec(const nlohmann::json& spec);

}  // namespace arbor
