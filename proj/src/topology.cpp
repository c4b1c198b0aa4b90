#include "arbor/topology.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>

#include <Eigen/SparseCore>

#include "arbor/graph_io.hpp"

namespace arbor {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

// --- Homology -----------------------------------------------------------------

namespace {

// Rank over GF(2) of a matrix given as sparse columns of sorted row indices.
std::int64_t rank_mod2(std::vector<std::vector<int>> columns) {
    std::unordered_map<int, std::size_t> pivot_of;
    std::int64_t rank = 0;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        auto& col = columns[c];
        while (!col.empty()) {
            auto it = pivot_of.find(col.back());
            if (it == pivot_of.end()) break;
            std::vector<int> sum;
            std::set_symmetric_difference(col.begin(), col.end(), columns[it->second].begin(),
                                          columns[it->second].end(), std::back_inserter(sum));
            col = std::move(sum);
        }
        if (!col.empty()) {
            pivot_of.emplace(col.back(), c);
            ++rank;
        }
    }
    return rank;
}

}  // namespace

std::vector<std::int64_t> betti_numbers_mod2(const Graph& g, std::int64_t cap) {
    std::vector<std::map<std::vector<Vertex>, int>> index;
    for_each_clique(
        g,
        [&](std::span<const Vertex> c) {
            if (index.size() < c.size()) index.resize(c.size());
            auto& level = index[c.size() - 1];
            level.emplace(std::vector<Vertex>(c.begin(), c.end()), static_cast<int>(level.size()));
        },
        cap);
    std::vector<std::int64_t> rank(index.size() + 1, 0);  // rank[k] of the boundary from dimension k
    for (std::size_t k = 1; k < index.size(); ++k) {
        std::vector<std::vector<int>> columns;
        columns.reserve(index[k].size());
        for (const auto& [simplex, id] : index[k]) {
            std::vector<int> col;
            for (std::size_t drop = 0; drop < simplex.size(); ++drop) {
                std::vector<Vertex> face;
                for (std::size_t i = 0; i < simplex.size(); ++i) {
                    if (i != drop) face.push_back(simplex[i]);
                }
                col.push_back(index[k - 1].at(face));
            }
            std::sort(col.begin(), col.end());
            columns.push_back(std::move(col));
        }
        rank[k] = rank_mod2(std::move(columns));
    }
    std::vector<std::int64_t> betti;
    for (std::size_t k = 0; k < index.size(); ++k) {
        betti.push_back(static_cast<std::int64_t>(index[k].size()) - rank[k] - rank[k + 1]);
    }
    return betti;
}

// --- Recognizer --------------------------------------------------------------

Recognizer::Recognizer(const Graph& ambient, RecognitionBudget budget) : g_(ambient), budget_(budget) {}

void Recognizer::charge() {
    if (static_cast<std::int64_t>(memo_size()) >= budget_.memo_entries) {
        throw BudgetError("recognition memo budget of " + std::to_string(budget_.memo_entries) +
                          " entries exhausted");
    }
}

VertexSet Recognizer::unit_sphere_in(const VertexSet& w, Vertex v) const {
    VertexSet s(g_.vertex_count());
    for (Vertex u : g_.neighbors(v)) {
        if (w.contains(u)) s.insert(u);
    }
    return s;
}

int Recognizer::degree_in(const VertexSet& w, Vertex v) const {
    int d = 0;
    for (Vertex u : g_.neighbors(v)) d += w.contains(u) ? 1 : 0;
    return d;
}

std::vector<Vertex> Recognizer::by_degree_in(const VertexSet& w) const {
    std::vector<std::pair<int, Vertex>> keyed;
    for (Vertex v : w.members()) keyed.emplace_back(degree_in(w, v), v);
    std::sort(keyed.begin(), keyed.end());
    std::vector<Vertex> out;
    out.reserve(keyed.size());
    for (auto [d, v] : keyed) out.push_back(v);
    return out;
}

bool Recognizer::connected_in(const VertexSet& w) const {
    auto members = w.members();
    if (members.empty()) return false;
    VertexSet seen(g_.vertex_count());
    std::vector<Vertex> stack{members.front()};
    seen.insert(members.front());
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex v : g_.neighbors(u)) {
            if (w.contains(v) && !seen.contains(v)) {
                seen.insert(v);
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == members.size();
}

// Repeatedly deletes a vertex whose current unit sphere is contractible,
// cheapest vertices first. Success certifies contractibility; a stall
// proves nothing.
bool Recognizer::greedy_collapse(const VertexSet& w) {
    VertexSet cur = w;
    int size = w.size();
    std::unordered_map<Vertex, int> degree;
    std::set<std::pair<int, Vertex>> pending;
    for (Vertex v : w.members()) {
        degree[v] = degree_in(w, v);
        pending.emplace(degree[v], v);
    }
    while (size > 1 && !pending.empty()) {
        Vertex v = pending.begin()->second;
        pending.erase(pending.begin());
        if (!contractible_impl(unit_sphere_in(cur, v))) continue;
        cur.erase(v);
        --size;
        for (Vertex u : g_.neighbors(v)) {
            if (!cur.contains(u)) continue;
            pending.erase({degree[u], u});
            --degree[u];
            pending.emplace(degree[u], u);
        }
    }
    return size == 1;
}

bool Recognizer::acyclic_mod2(const VertexSet& w) const {
    const auto betti = betti_numbers_mod2(induced_subgraph(g_, w).graph, budget_.clique_cap);
    return std::all_of(betti.begin() + 1, betti.end(), [](std::int64_t b) { return b == 0; }) && betti[0] == 1;
}

bool Recognizer::contractible_impl(const VertexSet& w) {
    if (auto it = contractible_memo_.find(w); it != contractible_memo_.end()) return it->second;
    const int size = w.size();
    bool result = false;
    if (size <= 1) {
        result = size == 1;
    } else if (!connected_in(w)) {
        result = false;
    } else {
        auto order = by_degree_in(w);
        if (degree_in(w, order.back()) == size - 1) {
            result = true;  // cones are contractible
        } else if (f_vector(g_, w, budget_.clique_cap).euler_characteristic() != 1) {
            result = false;
        } else if (size > kHomologyThreshold && !acyclic_mod2(w)) {
            // Collapses preserve homotopy type, so a contractible graph has
            // trivial homology. This settles large No cases without search.
            result = false;
        } else if (greedy_collapse(w)) {
            result = true;
        } else {
            for (Vertex v : order) {
                VertexSet rest = w;
                rest.erase(v);
                if (contractible_impl(unit_sphere_in(w, v)) && contractible_impl(rest)) {
                    result = true;
                    break;
                }
            }
        }
    }
    charge();
    contractible_memo_.emplace(w, result);
    return result;
}

int Recognizer::sphere_impl(const VertexSet& w) {
    if (auto it = sphere_memo_.find(w); it != sphere_memo_.end()) return it->second;
    const int size = w.size();
    int result = kNotSphere;
    if (size == 0) {
        result = -1;
    } else {
        int link = kNotSphere;
        bool uniform = true;
        for (Vertex v : w.members()) {
            int s = sphere_impl(unit_sphere_in(w, v));
            if (s == kNotSphere || (link != kNotSphere && s != link)) {
                uniform = false;
                break;
            }
            link = s;
        }
        if (uniform) {
            const int d = link + 1;
            if (d == 0) {
                result = size == 2 ? 0 : kNotSphere;
            } else if (d == 1) {
                // Unit spheres are 0-spheres, so w is 2-regular and triangle-free.
                result = connected_in(w) ? 1 : kNotSphere;
            } else if (f_vector(g_, w, budget_.clique_cap).euler_characteristic() == (d % 2 == 0 ? 2 : 0)) {
                for (Vertex v : by_degree_in(w)) {
                    VertexSet rest = w;
                    rest.erase(v);
                    if (contractible_impl(rest)) {
                        result = d;
                        break;
                    }
                }
            }
        }
    }
    charge();
    sphere_memo_.emplace(w, result);
    return result;
}

namespace {

template <class Body>
RecognitionResult guarded(Body&& body) {
    try {
        return body();
    } catch (const BudgetError& e) {
        return RecognitionResult{Verdict::Unknown, std::nullopt, std::nullopt, e.what()};
    }
}

}  // namespace

RecognitionResult Recognizer::contractible(const VertexSet& w) {
    return guarded([&] {
        bool yes = contractible_impl(w);
        return RecognitionResult{yes ? Verdict::Yes : Verdict::No, std::nullopt, std::nullopt,
                                 yes ? "" : "no vertex admits a contractible collapse"};
    });
}

RecognitionResult Recognizer::sphere_dimension(const VertexSet& w) {
    return guarded([&] {
        int d = sphere_impl(w);
        if (d != kNotSphere) return RecognitionResult{Verdict::Yes, d, std::nullopt, ""};
        RecognitionResult r{Verdict::No, std::nullopt, std::nullopt, "not a sphere"};
        int link = kNotSphere;
        for (Vertex v : w.members()) {
            int s = sphere_impl(unit_sphere_in(w, v));
            if (s == kNotSphere || (link != kNotSphere && s != link)) {
                r.witness = v;
                r.reason = s == kNotSphere ? "unit sphere is not a sphere" : "unit sphere dimensions differ";
                break;
            }
            link = s;
        }
        if (!r.witness) {
            r.reason = link + 1 <= 1 ? "wrong vertex count or disconnected"
                                     : "no vertex deletion leaves a contractible graph";
        }
        return r;
    });
}

RecognitionResult Recognizer::manifold_dimension(const VertexSet& w) {
    return guarded([&] {
        auto members = w.members();
        if (members.empty()) return RecognitionResult{Verdict::No, std::nullopt, std::nullopt, "empty graph"};
        int link = kNotSphere;
        for (Vertex v : members) {
            int s = sphere_impl(unit_sphere_in(w, v));
            if (s == kNotSphere) return RecognitionResult{Verdict::No, std::nullopt, v, "unit sphere is not a sphere"};
            if (link != kNotSphere && s != link) {
                return RecognitionResult{Verdict::No, std::nullopt, v, "unit sphere dimensions differ"};
            }
            link = s;
        }
        return RecognitionResult{Verdict::Yes, link + 1, std::nullopt, ""};
    });
}

RecognitionResult is_contractible(const Graph& g, RecognitionBudget budget) {
    return Recognizer(g, budget).contractible();
}

RecognitionResult sphere_dimension(const Graph& g, RecognitionBudget budget) {
    return Recognizer(g, budget).sphere_dimension();
}

RecognitionResult manifold_dimension(const Graph& g, RecognitionBudget budget) {
    return Recognizer(g, budget).manifold_dimension();
}

// --- f-polynomials and curvature ---------------------------------------------

std::int64_t FPolynomial::at_minus_one() const {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < coefficients.size(); ++i) sum += (i % 2 == 0) ? coefficients[i] : -coefficients[i];
    return sum;
}

FPolynomial FPolynomial::derivative() const {
    FPolynomial d;
    d.coefficients.clear();
    for (std::size_t i = 1; i < coefficients.size(); ++i) {
        d.coefficients.push_back(static_cast<std::int64_t>(i) * coefficients[i]);
    }
    if (d.coefficients.empty()) d.coefficients.push_back(0);
    return d;
}

FPolynomial operator*(const FPolynomial& a, const FPolynomial& b) {
    FPolynomial p;
    p.coefficients.assign(a.coefficients.size() + b.coefficients.size() - 1, 0);
    for (std::size_t i = 0; i < a.coefficients.size(); ++i) {
        for (std::size_t j = 0; j < b.coefficients.size(); ++j) {
            p.coefficients[i + j] += a.coefficients[i] * b.coefficients[j];
        }
    }
    return p;
}

FPolynomial f_polynomial(const FVector& f) {
    FPolynomial p;
    p.coefficients.insert(p.coefficients.end(), f.counts.begin(), f.counts.end());
    return p;
}

FPolynomial f_polynomial(const Graph& g, std::int64_t cap) { return f_polynomial(f_vector(g, cap)); }

std::vector<ExactRatio> gauss_bonnet_general_check(const Graph& g, std::int64_t cap) {
    std::vector<std::int64_t> lhs = f_polynomial(g, cap).derivative().coefficients;
    std::vector<std::int64_t> rhs;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        VertexSet sphere = VertexSet::of(g.vertex_count(), g.neighbors(v));
        auto local = f_polynomial(f_vector(g, sphere, cap)).coefficients;
        if (rhs.size() < local.size()) rhs.resize(local.size(), 0);
        for (std::size_t i = 0; i < local.size(); ++i) rhs[i] += local[i];
    }
    std::size_t n = std::max(lhs.size(), rhs.size());
    lhs.resize(n, 0);
    rhs.resize(n, 0);
    std::vector<ExactRatio> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(lhs[i] - rhs[i]);
    return out;
}

namespace {

ExactRatio curvature_from_sphere(const FVector& sphere) {
    ExactRatio k = 1;
    for (std::size_t i = 0; i < sphere.counts.size(); ++i) {
        ExactRatio term(sphere.counts[i], static_cast<std::int64_t>(i) + 2);
        k += (i % 2 == 0) ? -term : term;
    }
    return k;
}

}  // namespace

ExactRatio curvature(const Graph& g, Vertex v, std::int64_t cap) {
    if (!g.has_vertex(v)) throw InputError("curvature: invalid vertex " + std::to_string(v));
    return curvature_from_sphere(f_vector(g, VertexSet::of(g.vertex_count(), g.neighbors(v)), cap));
}

ExactRatio gauss_bonnet_sum(const Graph& g, std::int64_t cap) {
    ExactRatio total = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) total += curvature(g, v, cap);
    return total;
}

// --- Dehn-Sommerville, surface functionals -----------------------------------

std::vector<ExactRatio> dehn_sommerville_residuals(const FVector& f, int d) {
    if (d < 1 || d > 4) throw InputError("Dehn-Sommerville identities are tabulated for dimensions 1..4");
    if (f.dimension() != d) {
        throw InputError("f-vector has dimension " + std::to_string(f.dimension()) + ", expected " + std::to_string(d));
    }
    const std::int64_t V = f[0], E = f[1], F = f[2], C = f[3], H = f[4];
    switch (d) {
        case 1: return {ExactRatio(2 * E - 2 * V)};
        case 2: return {ExactRatio(3 * F - 2 * E)};
        case 3: return {ExactRatio(4 * C - 2 * F), ExactRatio(f.euler_characteristic())};
        default: return {ExactRatio(5 * H - 2 * C), ExactRatio(-22 * E + 33 * F - 40 * C + 45 * H)};
    }
}

std::vector<ExactRatio> dehn_sommerville_check(const Graph& g, int d, std::int64_t cap) {
    return dehn_sommerville_residuals(f_vector(g, cap), d);
}

ExactRatio surface_phi(std::int64_t euler_characteristic, std::int64_t faces) {
    if (faces < 4) throw InputError("surface_phi: a surface has at least 4 triangles");
    const std::int64_t den = 2 * euler_characteristic + faces - 2;
    if (den <= 0) throw InputError("surface_phi: nonpositive denominator 2X+F-2");
    return ExactRatio(3 * faces, den);
}

std::int64_t min_area_bound(std::int64_t x) {
    if (x > 2) throw InputError("no connected surface has Euler characteristic above 2");
    switch (x) {
        case 2: return 8;
        case 1: return 14;
        case 0: return 20;
        default: return 12 - 14 * x;
    }
}

std::optional<std::int64_t> min_area_bound_alternative(std::int64_t x) {
    if (x == 0) return 28;
    if (x < 0) return 10 - 14 * x;
    return std::nullopt;
}

LaplacianTraceResiduals laplacian_trace_check(const Graph& g, RecognitionBudget budget) {
    auto rec = manifold_dimension(g, budget);
    if (!rec.yes() || rec.dimension != 2) throw InputError("laplacian_trace_check: input is not a 2-manifold");
    using Sparse = Eigen::SparseMatrix<std::int64_t>;
    const int n = g.vertex_count();
    std::vector<Eigen::Triplet<std::int64_t>> entries;
    for (Vertex v = 0; v < n; ++v) {
        entries.emplace_back(v, v, g.degree(v));
        for (Vertex u : g.neighbors(v)) entries.emplace_back(v, u, -1);
    }
    Sparse laplacian(n, n);
    laplacian.setFromTriplets(entries.begin(), entries.end());
    Sparse identity(n, n);
    identity.setIdentity();
    const std::int64_t tr0 = identity.diagonal().sum();
    const std::int64_t tr1 = laplacian.diagonal().sum();
    const FVector f = f_vector(g);
    LaplacianTraceResiduals r;
    r.trace = tr1;
    r.vertices = ExactRatio(f[0]) - ExactRatio(tr0);
    r.edges = ExactRatio(f[1]) - ExactRatio(tr1, 2);
    r.faces = ExactRatio(f[2]) - ExactRatio(tr1, 3);
    return r;
}

// --- reports -----------------------------------------------------------------

ManifoldReport manifold_report(const Graph& g, RecognitionBudget budget) {
    ManifoldReport r;
    r.recognition = manifold_dimension(g, budget);
    r.f_vector = f_vector(g, budget.clique_cap);
    r.euler_characteristic = r.f_vector.euler_characteristic();
    if (r.recognition.yes() && r.recognition.dimension && *r.recognition.dimension >= 1 &&
        *r.recognition.dimension <= 4 && r.f_vector.dimension() == *r.recognition.dimension) {
        r.dehn_sommerville_residuals = dehn_sommerville_residuals(r.f_vector, *r.recognition.dimension);
    }
    r.curvature_sum = gauss_bonnet_sum(g, budget.clique_cap);
    if (g.vertex_count() >= 2) r.phi = ExactRatio(g.edge_count(), g.vertex_count() - 1);
    return r;
}

nlohmann::json to_json(const RecognitionResult& r) {
    nlohmann::json j{{"verdict", to_string(r.verdict)}};
    j["dimension"] = r.dimension ? nlohmann::json(*r.dimension) : nlohmann::json(nullptr);
    j["witness"] = r.witness ? nlohmann::json(*r.witness) : nlohmann::json(nullptr);
    if (!r.reason.empty()) j["reason"] = r.reason;
    return j;
}

nlohmann::json to_json(const ManifoldReport& r) {
    nlohmann::json j = to_json(r.recognition);
    j["f_vector"] = r.f_vector.counts;
    j["euler_characteristic"] = r.euler_characteristic;
    nlohmann::json ds = nlohmann::json::array();
    for (const auto& x : r.dehn_sommerville_residuals) ds.push_back(to_json(x));
    j["dehn_sommerville_residuals"] = std::move(ds);
    j["curvature_sum"] = to_json(r.curvature_sum);
    j["phi"] = r.phi ? to_json(*r.phi) : nlohmann::json(nullptr);
    return j;
}

}  // namespace arbor
