#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "arbor/exact.hpp"
#include "arbor/graph.hpp"

namespace arbor {

/// Assignment of every edge to one of k forests.
struct ForestPartition {
    int k = 0;
    std::vector<Edge> edges;  // same order as Graph::edges()
    std::vector<int> forest;  // forest[i] in [0, k) for edges[i]
};

/// Independent certificate check: every edge of g covered exactly once,
/// indices in range, each color class acyclic.
bool is_valid_forest_partition(const Graph& g, const ForestPartition& p);

/// A k-forest partition when one exists, found by augmenting exchanges over
/// k copies of the graphic matroid. std::nullopt certifies that none exists.
std::optional<ForestPartition> forest_partition(const Graph& g, int k);

/// Maximum of E_W / (|W| - 1) over vertex subsets with |W| >= 2.
struct DensityWitness {
    ExactRatio value;
    VertexSet witness;
};

/// Exact maximum density by parametric min-cut (Dinkelbach iteration).
/// Throws InputError for fewer than two vertices.
DensityWitness max_density(const Graph& g);

struct ArboricityResult {
    int k = 0;
    ForestPartition partition;
    std::optional<DensityWitness> density;  // absent for graphs with < 2 vertices
};

/// Minimum number of forests covering the edges. Starts from the ceiling of
/// the maximum density and scans upward; an edgeless graph has arboricity 0.
ArboricityResult arboricity(const Graph& g);

/// Exhaustive search oracle. Throws InputError above `max_edges` edges.
int brute_force_arboricity(const Graph& g, int max_edges = 16);

/// Nash-Williams functional E/(V-1). Throws InputError for V < 2.
ExactRatio phi(const Graph& g);

enum class SearchMode { Exhaustive, Sampled };

struct SampledSearch {
    std::int64_t samples = 10'000;
    std::uint64_t seed = 42;
    int jobs = 1;
};

struct ConjectureReport {
    std::string graph_id;
    ExactRatio phi_global;
    ExactRatio best_sub_phi;
    VertexSet best_sub_witness;
    SearchMode mode = SearchMode::Exhaustive;
    bool counterexample = false;  // best_sub_phi > phi_global
};

/// Largest vertex count accepted by the exhaustive conjecture check.
inline constexpr int kExhaustiveGuard = 24;

/// Compares phi over every induced subgraph with >= 2 vertices against phi(G).
/// Ties resolve to the lexicographically smallest vertex list.
ConjectureReport phi_maximality_check(const Graph& g, std::string graph_id = "");

/// Seeded random subsets improved by single-vertex moves. Can refute the
/// conjecture, never confirm it. Results do not depend on `jobs`.
ConjectureReport phi_maximality_check(const Graph& g, const SampledSearch& search, std::string graph_id = "");

nlohmann::json to_json(const ForestPartition& p);
nlohmann::json to_json(const DensityWitness& d);
nlohmann::json to_json(const ConjectureReport& r);

}  // namespace arbor
