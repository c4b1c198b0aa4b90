// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "arbor/arboricity.hpp"
#include "arbor/corpus.hpp"
#include "arbor/generators.hpp"
#include "arbor/registry.hpp"
#include "arbor/topology.hpp"
#include "arbor/transforms.hpp"
#include "arbor/whitney.hpp"
#include "oracles.hpp"

using namespace arbor;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string& what) {
        if (pass) detail.str("");
        pass = false;
        detail << what << "; ";
    }
};

struct Named {
    std::string name;
    Graph graph;
};

std::vector<Named> corpus_graphs() {
    std::ifstream in(ARBOR_CORPUS_PATH);
    std::vector<Named> out;
    for (const auto& e : parse_corpus(nlohmann::json::parse(in))) out.push_back({e.name, generate_from_spec(e.generator)});
    return out;
}

const std::vector<Named>& corpus() {
    static const std::vector<Named> graphs = corpus_graphs();
    return graphs;
}

std::optional<int> manifold_dim(const Graph& g) {
    const auto r = manifold_dimension(g);
    return r.yes() ? r.dimension : std::nullopt;
}

bool certified(const Graph& g, const ForestPartition& p) {
    if (!is_valid_forest_partition(g, p) || p.edges != g.edges()) return false;
    for (int c = 0; c < p.k; ++c) {
        std::vector<Edge> cls;
        for (std::size_t i = 0; i < p.edges.size(); ++i) {
            if (p.forest[i] == c) cls.push_back(p.edges[i]);
        }
        if (!oracle::is_forest(g.vertex_count(), cls)) return false;
    }
    return true;
}

std::string str(const ExactRatio& r) {
    std::ostringstream s;
    s << r;
    return s.str();
}

Outcome surface_arboricity() {
    Outcome o;
    std::vector<std::pair<Named, int>> cases;
    const Graph oct = octahedron();
    const Graph ico = icosahedron();
    const Graph oct1 = barycentric_refinement(oct);
    const Graph ico1 = barycentric_refinement(ico);
    cases.push_back({{"octahedron", oct}, 3});
    cases.push_back({{"octahedron^1", oct1}, 3});
    cases.push_back({{"octahedron^2", barycentric_refinement(oct1)}, 3});
    cases.push_back({{"icosahedron", ico}, 3});
    cases.push_back({{"icosahedron^1", ico1}, 3});
    cases.push_back({{"icosahedron^2", barycentric_refinement(ico1)}, 3});
    for (auto& [name, g] : std::vector<Named>{{"torus(4,4)", torus_grid(4, 4)},
                                              {"torus(5,5)", torus_grid(5, 5)},
                                              {"klein(4,4)", klein_bottle_grid(4, 4)},
                                              {"projective-plane", projective_plane()}}) {
        cases.push_back({{name + "^1", barycentric_refinement(g)}, 4});
        cases.push_back({{name, std::move(g)}, 4});
    }
    for (const auto& [c, want] : cases) {
        const auto r = arboricity(c.graph);
        if (!certified(c.graph, r.partition)) o.fail(c.name + ": certificate invalid");
        if (r.k != want) {
            o.fail(c.name + ": k=" + std::to_string(r.k) + " expected " + std::to_string(want) + ", max density " +
                   str(r.density->value));
        }
    }
    if (o.pass) o.detail << cases.size() << " surfaces, all certified";
    return o;
}

Outcome no_arboricity_five() {
    Outcome o;
    std::set<std::int64_t> chis;
    int surfaces = 0;
    for (const auto& [name, g] : corpus()) {
        if (manifold_dim(g) != 2) continue;
        ++surfaces;
        chis.insert(f_vector(g).euler_characteristic());
        const auto r = arboricity(g);
        if (r.k != 3 && r.k != 4) o.fail(name + ": k=" + std::to_string(r.k));
    }
    if (surfaces < 10) o.fail("only " + std::to_string(surfaces) + " surfaces");
    for (std::int64_t x : {2, 1, 0, -2}) {
        if (!chis.count(x)) o.fail("no surface with X=" + std::to_string(x));
    }
    if (o.pass) o.detail << surfaces << " corpus surfaces, X in {2,1,0,-2}, k in {3,4}";
    return o;
}

Outcome cross_polytope_bound() {
    Outcome o;
    for (int d = 1; d <= 4; ++d) {
        const Graph g = cross_polytope(d);
        const auto r = arboricity(g);
        if (r.k != d + 1 || !certified(g, r.partition)) o.fail("d=" + std::to_string(d) + " k=" + std::to_string(r.k));
    }
    const Graph s4 = cross_polytope(4);
    if (s4.edge_count() != 40) o.fail("4-sphere edge count");
    if (forest_partition(s4, 4)) o.fail("k=4 feasible on the 4-sphere");
    const auto five = forest_partition(s4, 5);
    if (!five || !certified(s4, *five)) o.fail("k=5 not feasible on the 4-sphere");
    if (o.pass) o.detail << "k=d+1 for d=1..4; 4-sphere: k=4 infeasible, k=5 certified";
    return o;
}

Outcome three_torus_bound() {
    Outcome o;
    const Graph g = three_torus(5);
    const auto start = std::chrono::steady_clock::now();
    if (ExactRatio(g.edge_count(), g.vertex_count()) != 7) o.fail("E/V != 7");
    const auto r = arboricity(g);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!(r.density->value > 7)) o.fail("max density " + str(r.density->value));
    if (r.k < 8) o.fail("k=" + std::to_string(r.k));
    if (!certified(g, r.partition)) o.fail("certificate invalid");
    if (secs > 600) o.fail("over the 10-minute budget");
    if (o.pass) {
        o.detail << "E/V=7, max density " << r.density->value << ", exact arboricity " << r.k << " in " << secs
                 << " s";
    }
    return o;
}

Outcome inflation() {
    Outcome o;
    InflationOptions opts;
    opts.validate_every = 1;
    const auto r = inflate_arboricity(zykov_join(cycle(4), cycle(4)), 5, opts);
    const auto d = max_density(r.graph).value;
    if (!(d > 5)) o.fail("max density " + str(d));
    if (manifold_dim(r.graph) != 3) o.fail("result is not a 3-manifold");
    int phase2 = 0;
    for (const auto& s : r.steps) {
        if (s.phase != 2) continue;
        ++phase2;
        if (s.vertex_delta != 1 || s.edge_delta != s.link_size + 1) o.fail("phase-2 delta mismatch");
    }
    if (phase2 == 0) o.fail("no phase-2 steps");
    if (o.pass) {
        o.detail << r.steps.size() << " steps (" << phase2 << " in phase 2), each re-recognized; max density " << d
                 << ", arboricity " << arboricity(r.graph).k;
    }
    return o;
}

Outcome gauss_bonnet() {
    Outcome o;
    auto check = [&](const std::string& name, const Graph& g) {
        if (gauss_bonnet_sum(g) != f_vector(g).euler_characteristic()) o.fail(name + ": curvature sum != X");
        for (const auto& r : gauss_bonnet_general_check(g)) {
            if (r != 0) {
                o.fail(name + ": general identity residual");
                break;
            }
        }
    };
    for (const auto& [name, g] : corpus()) check(name, g);
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        check("random seed " + std::to_string(seed), random_graph(6 + static_cast<int>(seed % 9), 0.5, seed));
    }
    if (o.pass) o.detail << corpus().size() << " corpus graphs + 200 random graphs (n<=14), exact";
    return o;
}

Outcome dehn_sommerville() {
    Outcome o;
    int checked = 0;
    for (const auto& [name, g] : corpus()) {
        const auto d = manifold_dim(g);
        if (!d || *d < 2 || *d > 4) continue;
        ++checked;
        for (const auto& r : dehn_sommerville_check(g, *d)) {
            if (r != 0) o.fail(name + ": residual " + str(r));
        }
    }
    const auto f = f_vector(cross_polytope(4));
    const std::int64_t s = -22 * f[1] + 33 * f[2] - 40 * f[3] + 45 * f[4];
    if (s != 0) o.fail("4-sphere relation gives " + std::to_string(s));
    if (checked == 0) o.fail("no manifolds in corpus");
    if (o.pass) o.detail << checked << " corpus manifolds; -22E+33F-40C+45H = 0 on the 4-sphere";
    return o;
}

Outcome barycentric_operator_check() {
    Outcome o;
    int checked = 0;
    auto check = [&](const std::string& name, const Graph& g) {
        if (f_vector(g).dimension() > 4) return;
        ++checked;
        if (!operator_check(g).isZero()) o.fail(name);
    };
    for (const auto& [name, g] : corpus()) check(name, g);
    int random = 0;
    for (std::uint64_t seed = 1; random < 100; ++seed) {
        const Graph g = random_graph(4 + static_cast<int>(seed % 11), 0.45, seed);
        if (f_vector(g).dimension() > 4) continue;
        ++random;
        check("random seed " + std::to_string(seed), g);
    }
    if (o.pass) o.detail << checked << " graphs (" << random << " random), f(G1) = A f(G) exactly";
    return o;
}

Outcome phi_trend() {
    Outcome o;
    int by_sign[3] = {0, 0, 0};
    for (const auto& [name, g] : corpus()) {
        if (manifold_dim(g) != 2) continue;
        const auto x = f_vector(g).euler_characteristic();
        const auto [p0, p1] = phi_refinement_trend(g);
        if (x == 2 && !(p1 > p0)) o.fail(name + ": no increase");
        if (x == 1 && !(p0 == 3 && p1 == 3)) o.fail(name + ": not fixed at 3");
        if (x <= 0 && !(p1 < p0 && p1 > 3)) o.fail(name + ": no decrease toward 3");
        ++by_sign[x == 2 ? 0 : x == 1 ? 1 : 2];
    }
    // Three refinements of the base surfaces.
    for (const auto& [name, base] : std::vector<Named>{{"octahedron", octahedron()},
                                                      {"icosahedron", icosahedron()},
                                                      {"projective-plane", projective_plane()},
                                                      {"torus(4,4)", torus_grid(4, 4)},
                                                      {"klein(4,4)", klein_bottle_grid(4, 4)}}) {
        const auto x = f_vector(base).euler_characteristic();
        Graph g = base;
        ExactRatio prev = phi(g);
        for (int i = 1; i <= 3; ++i) {
            g = barycentric_refinement(g);
            const ExactRatio cur = phi(g);
            const bool ok = x == 2 ? (cur > prev && cur < 3) : x == 1 ? cur == 3 : (cur < prev && cur > 3);
            if (!ok) o.fail(name + " step " + std::to_string(i) + ": " + str(prev) + " -> " + str(cur));
            prev = cur;
        }
    }
    if (o.pass) {
        o.detail << "corpus surfaces X=2: " << by_sign[0] << ", X=1: " << by_sign[1] << ", X<=0: " << by_sign[2]
                 << "; three-step iteration monotone toward 3";
    }
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(2024);
    int done = 0;
    while (done < 300) {
        const int n = 3 + static_cast<int>(rng() % 7);
        const double p = 0.2 + 0.7 * static_cast<double>(rng() % 1000) / 1000.0;
        const Graph g = random_graph(n, p, rng());
        if (g.edge_count() == 0 || g.edge_count() > 16) continue;
        ++done;
        const auto r = arboricity(g);
        const int brute = brute_force_arboricity(g);
        if (r.k != brute || BigInt(r.k) != ceil(max_density(g).value)) o.fail("graph " + std::to_string(done));
        if (!certified(g, r.partition)) o.fail("graph " + std::to_string(done) + ": certificate");
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > 120) o.fail("took " + std::to_string(secs) + " s");
    if (o.pass) o.detail << done << " graphs agree, certificates validated, " << secs << " s";
    return o;
}

Outcome whitney() {
    Outcome o;
    std::vector<Named> graphs = corpus();
    graphs.push_back({"K4", complete(4)});
    graphs.push_back({"K5", complete(5)});
    graphs.push_back({"K3,3", complete_bipartite(3, 3)});
    for (int n = 4; n <= 7; ++n) graphs.push_back({"wheel C" + std::to_string(n), wheel(n)});
    graphs.push_back({"octahedron-minus-vertex", remove_vertex(octahedron(), 0)});
    int left = 0;
    for (const auto& [name, g] : graphs) {
        if (g.edge_count() == 0) continue;
        const auto v = whitney_classify(g);
        if (v.consistency != true) o.fail(name);
        if (v.left()) ++left;
    }
    if (is_planar(complete(5)) || is_planar(complete_bipartite(3, 3))) o.fail("K5/K3,3 reported planar");
    if (o.pass) o.detail << graphs.size() << " graphs consistent (" << left << " 4-connected maximal planar)";
    return o;
}

Outcome recognition() {
    Outcome o;
    for (const auto& [name, g] : corpus()) {
        if (sphere_dimension(g).verdict == Verdict::Unknown) o.fail(name + ": sphere Unknown");
        if (manifold_dimension(g).verdict == Verdict::Unknown) o.fail(name + ": manifold Unknown");
    }
    if (o.pass) o.detail << corpus().size() << " corpus graphs certified under default budgets";
    return o;
}

Outcome min_area() {
    Outcome o;
    std::vector<Named> surfaces = {{"octahedron", octahedron()},         {"icosahedron", icosahedron()},
                                   {"torus(4,4)", torus_grid(4, 4)},     {"torus(5,5)", torus_grid(5, 5)},
                                   {"klein(4,4)", klein_bottle_grid(4, 4)}, {"projective-plane", projective_plane()}};
    for (const auto& e : corpus()) {
        if (manifold_dim(e.graph) == 2) surfaces.push_back(e);
    }
    for (const auto& [name, g] : surfaces) {
        const auto f = f_vector(g);
        if (f[2] < min_area_bound(f.euler_characteristic())) o.fail(name + ": F below bound");
    }
    if (f_vector(octahedron())[2] != 8 || min_area_bound(2) != 8) o.fail("octahedron does not attain 8");
    if (o.pass) o.detail << surfaces.size() << " surfaces satisfy F >= bound(X); octahedron attains F=8";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"surface arboricity", surface_arboricity},
        {"no surface of arboricity 5", no_arboricity_five},
        {"cross polytope lower bound", cross_polytope_bound},
        {"three-torus bound", three_torus_bound},
        {"inflation", inflation},
        {"Gauss-Bonnet", gauss_bonnet},
        {"Dehn-Sommerville", dehn_sommerville},
        {"barycentric operator", barycentric_operator_check},
        {"phi trend", phi_trend},
        {"oracle equivalence", oracle_equivalence},
        {"Whitney consistency", whitney},
        {"recognition pipeline", recognition},
        {"minimal area", min_area},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failures;
        std::printf("%s %2zu %-28s %6.2fs  %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                    o.detail.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
