#pragma once

#include <string>
#include <vector>

#include "arbor/graph.hpp"

namespace arbor::detail {

/// Containment graph of a downward-closed family of sorted faces.
/// `labels[i]` is attached to faces[i]. Vertices keep the order of `faces`.
Graph face_poset_graph(const std::vector<std::vector<Vertex>>& faces, std::vector<std::string> labels);

std::string face_label(const std::vector<Vertex>& face);

}  // namespace arbor::detail
