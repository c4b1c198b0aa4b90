#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "arbor/exact.hpp"
#include "arbor/graph.hpp"

namespace arbor {

enum class Verdict { Yes, No, Unknown };

std::string to_string(Verdict v);

/// Outcome of a recognition query. `No` and `Yes` are certified; `Unknown`
/// means a budget ran out and `reason` names which one.
struct RecognitionResult {
    Verdict verdict = Verdict::Unknown;
    std::optional<int> dimension;
    std::optional<Vertex> witness;  // vertex whose unit sphere fails, for No
    std::string reason;

    bool yes() const { return verdict == Verdict::Yes; }
};

struct RecognitionBudget {
    std::int64_t memo_entries = 1'000'000;
    std::int64_t clique_cap = kDefaultCliqueCap;
};

/// Memoized contractibility and sphere/manifold recognition over the induced
/// subgraphs of one ambient graph.
///
/// Every graph met by the recursion (unit spheres, vertex deletions, and
/// their unit spheres) is an induced subgraph of the ambient graph, so
/// results are cached on VertexSet keys and shared between queries.
class Recognizer {
public:
    explicit Recognizer(const Graph& ambient, RecognitionBudget budget = {});

    RecognitionResult contractible(const VertexSet& w);
    RecognitionResult sphere_dimension(const VertexSet& w);
    RecognitionResult manifold_dimension(const VertexSet& w);

    RecognitionResult contractible() { return contractible(VertexSet::all(g_.vertex_count())); }
    RecognitionResult sphere_dimension() { return sphere_dimension(VertexSet::all(g_.vertex_count())); }
    RecognitionResult manifold_dimension() { return manifold_dimension(VertexSet::all(g_.vertex_count())); }

    std::size_t memo_size() const { return contractible_memo_.size() + sphere_memo_.size(); }

private:
    static constexpr int kNotSphere = -2;
    static constexpr int kHomologyThreshold = 12;

    bool contractible_impl(const VertexSet& w);
    bool acyclic_mod2(const VertexSet& w) const;
    bool greedy_collapse(const VertexSet& w);
    int sphere_impl(const VertexSet& w);
    void charge();

    VertexSet unit_sphere_in(const VertexSet& w, Vertex v) const;
    std::vector<Vertex> by_degree_in(const VertexSet& w) const;
    int degree_in(const VertexSet& w, Vertex v) const;
    bool connected_in(const VertexSet& w) const;

    const Graph& g_;
    RecognitionBudget budget_;
    std::unordered_map<VertexSet, bool, VertexSetHash> contractible_memo_;
    std::unordered_map<VertexSet, int, VertexSetHash> sphere_memo_;
};

/// Betti numbers b_0, b_1, ... of the clique complex over GF(2).
std::vector<std::int64_t> betti_numbers_mod2(const Graph& g, std::int64_t cap = kDefaultCliqueCap);

RecognitionResult is_contractible(const Graph& g, RecognitionBudget budget = {});
RecognitionResult sphere_dimension(const Graph& g, RecognitionBudget budget = {});
RecognitionResult manifold_dimension(const Graph& g, RecognitionBudget budget = {});

/// Coefficients of f(t) = 1 + sum_k f_k t^(k+1); coefficients[0] == 1.
struct FPolynomial {
    std::vector<std::int64_t> coefficients{1};

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    /// f(t) at t = -1; the Euler characteristic is 1 - f(-1).
    std::int64_t at_minus_one() const;
    FPolynomial derivative() const;
    friend FPolynomial operator*(const FPolynomial& a, const FPolynomial& b);
    friend bool operator==(const FPolynomial&, const FPolynomial&) = default;
};

FPolynomial f_polynomial(const FVector& f);
FPolynomial f_polynomial(const Graph& g, std::int64_t cap = kDefaultCliqueCap);

/// Coefficient-wise f_G'(t) - sum_v f_{S(v)}(t). Identically zero for every graph.
std::vector<ExactRatio> gauss_bonnet_general_check(const Graph& g, std::int64_t cap = kDefaultCliqueCap);

/// K(v) = sum_{k>=0} (-1)^k f_{k-1}(S(v)) / (k+1), with f_{-1} = 1.
ExactRatio curvature(const Graph& g, Vertex v, std::int64_t cap = kDefaultCliqueCap);

/// Sum of curvatures over all vertices; equals the Euler characteristic.
ExactRatio gauss_bonnet_sum(const Graph& g, std::int64_t cap = kDefaultCliqueCap);

/// Residuals of the Dehn-Sommerville identities for a d-manifold, 1 <= d <= 4:
///   d=1: 2E-2V;  d=2: 3F-2E;  d=3: 4C-2F, X;  d=4: 5H-2C, -22E+33F-40C+45H.
/// Throws InputError when the f-vector's dimension is not d.
std::vector<ExactRatio> dehn_sommerville_residuals(const FVector& f, int d);
std::vector<ExactRatio> dehn_sommerville_check(const Graph& g, int d, std::int64_t cap = kDefaultCliqueCap);

/// Nash-Williams functional E/(V-1) of a surface from its Euler
/// characteristic and triangle count, 3F/(2X+F-2).
ExactRatio surface_phi(std::int64_t euler_characteristic, std::int64_t faces);

/// Lower bound on the triangle count of a connected surface:
/// 8 (X=2), 14 (X=1), 20 (X=0), 12-14X (X<0). Throws for X > 2.
std::int64_t min_area_bound(std::int64_t euler_characteristic);

/// The alternative figures used in the no-arboricity-5 argument: 28 for X=0
/// and 10-14X for X<0; none otherwise. Kept for reference only.
std::optional<std::int64_t> min_area_bound_alternative(std::int64_t euler_characteristic);

struct LaplacianTraceResiduals {
    ExactRatio vertices;  // V - tr(L^0)
    ExactRatio edges;     // E - tr(L)/2
    ExactRatio faces;     // F - tr(L)/3
    std::int64_t trace = 0;
};

/// Kirchhoff-Laplacian trace identities for surfaces. Throws InputError if g
/// is not recognized as a 2-manifold.
LaplacianTraceResiduals laplacian_trace_check(const Graph& g, RecognitionBudget budget = {});

struct ManifoldReport {
    RecognitionResult recognition;
    FVector f_vector;
    std::int64_t euler_characteristic = 0;
    std::vector<ExactRatio> dehn_sommerville_residuals;  // empty unless 1 <= dim <= 4
    ExactRatio curvature_sum;
    std::optional<ExactRatio> phi;  // E/(V-1), when V >= 2
};

ManifoldReport manifold_report(const Graph& g, RecognitionBudget budget = {});
nlohmann::json to_json(const ManifoldReport& r);
nlohmann::json to_json(const RecognitionResult& r);

}  // namespace arbor
