#include <doctest.h>

#include <random>

#include "arbor/arboricity.hpp"
#include "arbor/generators.hpp"
#include "arbor/transforms.hpp"
#include "oracles.hpp"

using namespace arbor;

namespace {

// Validity checked with the oracle's leaf stripping, not the library validator.
bool partition_ok(const Graph& g, const ForestPartition& p) {
    if (p.edges != g.edges() || p.forest.size() != p.edges.size()) return false;
    for (int c = 0; c < p.k; ++c) {
        std::vector<Edge> cls;
        for (std::size_t i = 0; i < p.edges.size(); ++i) {
            if (p.forest[i] < 0 || p.forest[i] >= p.k) return false;
            if (p.forest[i] == c) cls.push_back(p.edges[i]);
        }
        if (!oracle::is_forest(g.vertex_count(), cls)) return false;
    }
    return true;
}

// Deterministic stream of random graphs with at most `max_edges` edges.
std::vector<Graph> small_graphs(int count, int max_edges, std::uint64_t seed) {
    std::vector<Graph> out;
    std::mt19937_64 rng(seed);
    while (static_cast<int>(out.size()) < count) {
        const int n = 3 + static_cast<int>(rng() % 7);
        const double p = 0.2 + 0.7 * static_cast<double>(rng() % 1000) / 1000.0;
        Graph g = random_graph(n, p, rng());
        if (g.edge_count() <= max_edges && g.edge_count() > 0) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace

TEST_CASE("forest partition feasibility") {
    const auto k4 = forest_partition(complete(4), 2);
    REQUIRE(k4.has_value());
    CHECK(partition_ok(complete(4), *k4));
    CHECK(oracle::arboricity_by_assignment(complete(4)) == 2);

    CHECK_FALSE(forest_partition(octahedron(), 2).has_value());
    CHECK(forest_partition(octahedron(), 3).has_value());

    const Graph tree = path(7);
    const auto one = forest_partition(tree, 1);
    REQUIRE(one.has_value());
    CHECK(std::all_of(one->forest.begin(), one->forest.end(), [](int f) { return f == 0; }));

    CHECK_FALSE(forest_partition(cross_polytope(4), 4).has_value());
    const auto five = forest_partition(cross_polytope(4), 5);
    REQUIRE(five.has_value());
    CHECK(partition_ok(cross_polytope(4), *five));
}

TEST_CASE("certificate validator rejects bad partitions") {
    const Graph g = cycle(4);
    ForestPartition p{1, g.edges(), {0, 0, 0, 0}};
    CHECK_FALSE(is_valid_forest_partition(g, p));
    p = ForestPartition{2, g.edges(), {0, 0, 0, 1}};
    CHECK(is_valid_forest_partition(g, p));
    p.forest.pop_back();
    CHECK_FALSE(is_valid_forest_partition(g, p));
    p = ForestPartition{2, g.edges(), {0, 0, 0, 2}};
    CHECK_FALSE(is_valid_forest_partition(g, p));
}

TEST_CASE("arboricity of named graphs") {
    CHECK(arboricity(octahedron()).k == 3);
    CHECK(arboricity(icosahedron()).k == 3);
    CHECK(arboricity(torus_grid(4, 4)).k == 4);
    CHECK(arboricity(klein_bottle_grid(4, 4)).k == 4);
    CHECK(arboricity(cross_polytope(3)).k == 4);
    CHECK(arboricity(edgeless(5)).k == 0);
    CHECK(arboricity(Graph(0)).k == 0);
    for (int d = 1; d <= 4; ++d) CHECK(arboricity(cross_polytope(d)).k == d + 1);
}

TEST_CASE("projective plane: exact density 3 and a certified 3-forest partition") {
    const Graph g = projective_plane();
    const auto r = arboricity(g);
    CHECK(r.density->value == 3);
    CHECK(r.k == 3);
    CHECK(partition_ok(g, r.partition));
}

TEST_CASE("max density agrees with exhaustive subsets") {
    const auto oct = max_density(octahedron());
    CHECK(oct.value == ExactRatio(12, 5));
    CHECK(oct.witness == VertexSet::all(6));
    const auto ico = max_density(icosahedron());
    CHECK(ico.value == ExactRatio(30, 11));
    CHECK(ico.witness == VertexSet::all(12));
    CHECK(max_density(complete(2)).value == 1);
    CHECK_THROWS_AS(max_density(complete(1)), InputError);

    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        Graph g = random_graph(5 + static_cast<int>(seed % 9), 0.15 + 0.01 * static_cast<double>(seed % 60), seed);
        const auto w = max_density(g);
        CHECK_MESSAGE(w.value == oracle::max_density(g), "seed " << seed);
        REQUIRE(w.witness.size() >= 2);
        const Graph sub = induced_subgraph(g, w.witness).graph;
        CHECK(ExactRatio(sub.edge_count(), sub.vertex_count() - 1) == w.value);
    }
}

TEST_CASE("brute-force oracle") {
    CHECK(brute_force_arboricity(complete(4)) == 2);
    CHECK(brute_force_arboricity(cycle(5)) == 2);
    CHECK(brute_force_arboricity(star(5)) == 1);
    CHECK(brute_force_arboricity(edgeless(3)) == 0);
    CHECK_THROWS_AS(brute_force_arboricity(complete(7)), InputError);
    CHECK(brute_force_arboricity(complete(6)) == 3);
}

TEST_CASE("oracle equivalence on 300 random graphs with at most 16 edges") {
    const auto graphs = small_graphs(300, 16, 2024);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        const auto r = arboricity(g);
        CHECK(partition_ok(g, r.partition));
        CHECK(r.k == brute_force_arboricity(g));
        CHECK(BigInt(r.k) == ceil(max_density(g).value));
        if (g.edge_count() <= 9) CHECK_MESSAGE(r.k == oracle::arboricity_by_assignment(g), "graph " << i);
    }
}

TEST_CASE("arboricity is monotone under induced subgraphs") {
    std::mt19937 rng(17);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Graph g = random_graph(14, 0.4, seed);
        const int k = arboricity(g).k;
        VertexSet w(14);
        for (Vertex v = 0; v < 14; ++v) {
            if (rng() % 3) w.insert(v);
        }
        CHECK(arboricity(induced_subgraph(g, w).graph).k <= k);
    }
}

TEST_CASE("phi") {
    CHECK(phi(octahedron()) == ExactRatio(12, 5));
    CHECK(phi(projective_plane()) == 3);
    CHECK(phi(disjoint_union(complete(2), complete(1))) == ExactRatio(1, 2));
    CHECK_THROWS_AS(phi(complete(1)), InputError);
}

TEST_CASE("phi maximality explorer") {
    const auto oct = phi_maximality_check(octahedron(), "oct");
    CHECK_FALSE(oct.counterexample);
    CHECK(oct.best_sub_phi == oct.phi_global);
    CHECK(oct.mode == SearchMode::Exhaustive);

    const Graph k2k1 = disjoint_union(complete(2), complete(1));
    const auto r = phi_maximality_check(k2k1);
    CHECK(r.counterexample);
    CHECK(r.phi_global == ExactRatio(1, 2));
    CHECK(r.best_sub_phi == 1);
    CHECK(r.best_sub_witness.members() == std::vector<Vertex>{0, 1});
    CHECK(to_json(r).at("verdict") == "counterexample");

    const auto torus = phi_maximality_check(torus_grid(4, 4), SampledSearch{10'000, 42, 1});
    CHECK_FALSE(torus.counterexample);
    CHECK(torus.mode == SearchMode::Sampled);

    CHECK_THROWS_AS(phi_maximality_check(torus_grid(5, 5)), InputError);
}

TEST_CASE("sampled search does not depend on the worker count") {
    const Graph g = disjoint_union(torus_grid(4, 4), complete(5));
    const auto one = to_json(phi_maximality_check(g, SampledSearch{2000, 7, 1}));
    const auto four = to_json(phi_maximality_check(g, SampledSearch{2000, 7, 4}));
    CHECK(one == four);
    CHECK(one.at("verdict") == "counterexample");
}

TEST_CASE("json forms") {
    const Graph g = path(3);
    const auto p = arboricity(g).partition;
    const auto j = to_json(p);
    REQUIRE(j.size() == 2);
    CHECK(j[0].at("edge") == nlohmann::json{0, 1});
    CHECK(j[0].at("forest") == 0);
    const auto d = to_json(max_density(octahedron()));
    CHECK(d.at("value") == nlohmann::json{{"num", 12}, {"den", 5}});
    CHECK(d.at("witness").size() == 6);
}
