#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "arbor/exact.hpp"
#include "arbor/graph.hpp"
#include "arbor/topology.hpp"

namespace arbor {

/// Barycentric refinement: one vertex per complete subgraph, edges by strict
/// containment. Labels read "<dim>:{a,b,...}" with the originating clique.
Graph barycentric_refinement(const Graph& g, std::int64_t cap = kDefaultCliqueCap);

template <typename Scalar>
using SquareMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// (d+1) x (d+1) matrix A with f(refinement) = A f(G); A(i, j) counts the
/// i-simplices in the refined j-simplex, (i+1)! S(j+1, i+1). Defined for 0 <= d <= 4.
template <typename Scalar = std::int64_t>
SquareMatrix<Scalar> barycentric_operator(int d) {
    if (d < 0 || d > 4) throw InputError("barycentric operator is tabulated for 0 <= d <= 4");
    const int size = d + 1;
    // Stirling numbers of the second kind, S(n, k) for n, k <= 5.
    SquareMatrix<Scalar> stirling = SquareMatrix<Scalar>::Zero(size + 1, size + 1);
    stirling(0, 0) = 1;
    for (int n = 1; n <= size; ++n) {
        for (int k = 1; k <= n; ++k) stirling(n, k) = Scalar(k) * stirling(n - 1, k) + stirling(n - 1, k - 1);
    }
    SquareMatrix<Scalar> a = SquareMatrix<Scalar>::Zero(size, size);
    Scalar factorial = 1;
    for (int i = 0; i < size; ++i) {
        factorial *= Scalar(i + 1);
        for (int j = i; j < size; ++j) a(i, j) = factorial * stirling(j + 1, i + 1);
    }
    return a;
}

/// f(refinement(g)) - A f(g), zero-padded to length 5. Throws InputError when
/// g has dimension above 4.
Eigen::Matrix<std::int64_t, 5, 1> operator_check(const Graph& g, std::int64_t cap = kDefaultCliqueCap);

/// (E/(V-1) before, E'/(V'-1) after one refinement) for a recognized surface.
std::pair<ExactRatio, ExactRatio> phi_refinement_trend(const Graph& g, RecognitionBudget budget = {});

/// Subgraph induced by the common neighbors of the edge's endpoints.
Graph edge_link(const Graph& g, Edge e);

/// Number of vertices of edge_link(g, e); the edge degree in a 3-manifold.
int edge_degree(const Graph& g, Edge e);

struct Subdivision {
    Graph graph;
    Vertex midpoint = -1;
    int link_size = 0;  // edge degree of the subdivided edge
};

/// Replaces edge (a, b) by a new vertex joined to a, b and the link cycle.
/// Net change: one vertex and link_size + 1 edges. Throws InputError if e is
/// not an edge or its link is not a cycle; with `validate` the result is
/// re-recognized as a 3-manifold.
Subdivision edge_subdivide(const Graph& g, Edge e, bool validate = false, RecognitionBudget budget = {});

struct InflationStep {
    int phase = 0;  // 1: raise the edge degree, 2: repeat at the child edge
    Edge edge;
    int vertex_delta = 0;
    std::int64_t edge_delta = 0;
    int link_size = 0;
};

struct InflationOptions {
    std::int64_t max_steps = 100'000;
    /// Re-recognize the 3-manifold every this many steps; 0 disables.
    int validate_every = 0;
    RecognitionBudget budget{};
};

struct InflationResult {
    Graph graph;
    Edge pivot;  // the high-degree edge used in phase 2, in result ids
    int pivot_degree = 0;
    std::vector<InflationStep> steps;
};

/// Raises E/(V-1) of a 3-manifold above `target` by edge subdivisions: first
/// subdivide link edges of a fixed edge round-robin until its degree exceeds
/// `target`, then repeatedly subdivide the child edge at the same endpoint.
/// Throws BudgetError after max_steps subdivisions.
InflationResult inflate_arboricity(const Graph& g, int target, const InflationOptions& options = {});

}  // namespace arbor
