#include <doctest.h>

#include "arbor/generators.hpp"
#include "arbor/registry.hpp"
#include "arbor/topology.hpp"
#include "oracles.hpp"

using namespace arbor;

namespace {

int dimension_of(const Graph& g) {
    const auto r = manifold_dimension(g);
    REQUIRE(r.verdict != Verdict::Unknown);
    return r.yes() ? *r.dimension : -99;
}

// klein_bottle_grid's gluing without its size guard.
Graph unguarded_klein(int m, int n) {
    auto id = [&](int x, int y) {
        while (y >= n) {
            x = y - n - x;
            y -= n;
        }
        return ((x % m) + m) % m * n + y;
    };
    std::vector<Edge> edges;
    for (int x = 0; x < m; ++x) {
        for (int y = 0; y < n; ++y) {
            edges.emplace_back(id(x, y), id(x + 1, y));
            edges.emplace_back(id(x, y), id(x, y + 1));
            edges.emplace_back(id(x, y), id(x + 1, y + 1));
        }
    }
    return Graph::from_edges_dedup(m * n, edges);
}

}  // namespace

TEST_CASE("basic families") {
    CHECK(cycle(3) == complete(3));
    CHECK(cycle(4).edge_count() == 4);
    CHECK(complete(4).edge_count() == 6);
    CHECK(path(4).edge_count() == 3);
    CHECK(star(5).edge_count() == 5);
    CHECK(complete_bipartite(3, 3).edge_count() == 9);
    CHECK(wheel(5).vertex_count() == 6);
    CHECK(wheel(5).edge_count() == 10);
    CHECK(edgeless(4).edge_count() == 0);
    CHECK_THROWS_AS(cycle(2), InputError);
    CHECK(complete(0).vertex_count() == 0);
}

TEST_CASE("zykov join") {
    CHECK(zykov_join(edgeless(2), edgeless(2)).edge_count() == 4);
    CHECK(dimension_of(zykov_join(edgeless(2), edgeless(2))) == 1);
    const Graph s3 = zykov_join(cycle(4), cycle(4));
    CHECK(f_vector(s3).counts == std::vector<std::int64_t>{8, 24, 32, 16});
    CHECK(is_contractible(zykov_join(complete(1), torus_grid(4, 4))).yes());

    // Joins of j- and l-spheres are (j + l + 1)-spheres for j, l in {0, 1}.
    const Graph spheres[] = {edgeless(2), cycle(4), cycle(5)};
    const int dims[] = {0, 1, 1};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const auto r = sphere_dimension(zykov_join(spheres[i], spheres[j]));
            CHECK(r.dimension == dims[i] + dims[j] + 1);
        }
    }
}

TEST_CASE("f-polynomials multiply under joins") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const Graph a = random_graph(2 + static_cast<int>(seed % 5), 0.5, seed);
        const Graph b = random_graph(2 + static_cast<int>((seed * 7) % 5), 0.5, seed + 1000);
        CHECK(f_polynomial(zykov_join(a, b)) == f_polynomial(a) * f_polynomial(b));
    }
}

TEST_CASE("cross polytopes") {
    for (int d = 0; d <= 4; ++d) {
        const Graph g = cross_polytope(d);
        CHECK(g.vertex_count() == 2 * (d + 1));
        for (Vertex v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == 2 * d);
    }
    CHECK(cross_polytope(2) == octahedron());
    CHECK(f_vector(cross_polytope(3)).counts == std::vector<std::int64_t>{8, 24, 32, 16});
    CHECK(cross_polytope(0).edge_count() == 0);
}

TEST_CASE("icosahedron") {
    const Graph g = icosahedron();
    CHECK(oracle::f_vector(g) == std::vector<std::int64_t>{12, 30, 20});
    for (Vertex v = 0; v < 12; ++v) {
        const Graph s = unit_sphere(g, v);
        CHECK(s.vertex_count() == 5);
        CHECK(s.edge_count() == 5);
        CHECK(is_connected(s));
    }
}

TEST_CASE("torus and Klein bottle grids") {
    CHECK(f_vector(torus_grid(4, 4)).counts == std::vector<std::int64_t>{16, 48, 32});
    CHECK(f_vector(torus_grid(5, 4)).counts == std::vector<std::int64_t>{20, 60, 40});
    CHECK(dimension_of(torus_grid(4, 4)) == 2);
    CHECK_THROWS_AS(torus_grid(3, 4), InputError);
    CHECK_THROWS_AS(klein_bottle_grid(4, 3), InputError);
    for (int m = 4; m <= 7; ++m) {
        for (int n = 4; n <= 6; ++n) {
            const Graph k = klein_bottle_grid(m, n);
            CHECK(dimension_of(k) == 2);
            CHECK(f_vector(k) == f_vector(torus_grid(m, n)));
            CHECK(gauss_bonnet_sum(k) == 0);
            CHECK(f_vector(k)[2] >= 20);
        }
    }
}

TEST_CASE("the Klein gluing needs both sides at least 4") {
    CHECK(unguarded_klein(4, 4) == klein_bottle_grid(4, 4));
    CHECK(unguarded_klein(5, 4) == klein_bottle_grid(5, 4));
    // With a side of 3 the wrap-around closes extra triangles, so unit
    // spheres stop being cycles.
    for (const auto& [m, n] : {std::pair{3, 4}, std::pair{4, 3}, std::pair{3, 3}}) {
        const Graph bad = unguarded_klein(m, n);
        CHECK(f_vector(bad).euler_characteristic() != 0);
        CHECK(dimension_of(bad) == -99);
    }
}

TEST_CASE("projective plane") {
    const Graph g = projective_plane();
    CHECK(f_vector(g).counts == std::vector<std::int64_t>{31, 90, 60});
    CHECK(f_vector(g).euler_characteristic() == 1);
    CHECK(dimension_of(g) == 2);
    CHECK(g == barycentric_of_complex(hemi_icosahedron()));
    CHECK(g.has_labels());
    // As a graph the hemi-icosahedron is K6, whose unit spheres are K5.
    const SimplicialComplex h = hemi_icosahedron();
    CHECK(h.facets.size() == 10);
    CHECK_NOTHROW(validate(h));
}

TEST_CASE("three-torus") {
    const Graph g = three_torus(5);
    CHECK(g.vertex_count() == 125);
    CHECK(g.edge_count() == 875);
    CHECK(dimension_of(g) == 3);
    CHECK(f_vector(g).euler_characteristic() == 0);
    CHECK_THROWS_AS(three_torus(4), InputError);
}

TEST_CASE("complex ingestion") {
    const Graph tri = barycentric_of_complex({{{0, 1, 2}}});
    CHECK(tri.vertex_count() == 7);
    CHECK(tri.edge_count() == 12);
    const Graph seg = barycentric_of_complex({{{0, 1}}});
    CHECK(seg.vertex_count() == 3);
    CHECK(seg.edge_count() == 2);
    CHECK_THROWS_AS(barycentric_of_complex({{{0, 1}, {0, 1, 2}}}), InputError);
    CHECK_THROWS_AS(barycentric_of_complex({{{0, 0, 1}}}), InputError);
    CHECK_THROWS_AS(barycentric_of_complex({{{0, 2}}}), InputError);

    const SimplicialComplex t = clique_complex(torus_grid(4, 4));
    CHECK(t.facets.size() == 32);
    const Graph genus2 = barycentric_of_complex(connected_sum(t, t));
    CHECK(dimension_of(genus2) == 2);
    CHECK(f_vector(genus2).euler_characteristic() == -2);
}

TEST_CASE("registry") {
    CHECK(generate_family("torus", {{"m", 4}, {"n", 4}}) == torus_grid(4, 4));
    CHECK(generate_family("cross-polytope", {{"d", 3}}).vertex_count() == 8);
    CHECK(generate_family("cycle", {{"n", 3}}) == complete(3));
    CHECK(generate_from_spec({{"family", "octahedron"}, {"refine", 1}}).vertex_count() == 26);
    CHECK(generate_from_spec({{"family", "icosahedron"}, {"remove", 0}}).edge_count() == 25);
    CHECK(generate_from_spec({{"family", "complete"}, {"params", {{"n", 2}}}, {"isolated", 1}}).vertex_count() == 3);
    CHECK_THROWS_AS(generate_family("moebius", {}), InputError);
    CHECK_THROWS_AS(generate_family("torus", {{"m", 4}}), InputError);
    CHECK(random_graph(20, 0.3, 5) == random_graph(20, 0.3, 5));
    CHECK_FALSE(random_graph(20, 0.3, 5) == random_graph(20, 0.3, 6));
}
