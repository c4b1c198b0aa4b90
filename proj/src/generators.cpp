#include "arbor/generators.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <string>

#include "arbor/detail/face_poset.hpp"
#include "arbor/topology.hpp"

namespace arbor {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw InputError(message);
}

int mod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

Graph cycle(int n) {
    require(n >= 3, "cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges_dedup(n, edges);
}

Graph complete(int n) {
    require(n >= 0, "complete graph needs n >= 0");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    return Graph(n, edges);
}

Graph path(int n) {
    require(n >= 1, "path needs at least 1 vertex");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph star(int leaves) {
    require(leaves >= 0, "star needs leaves >= 0");
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph(leaves + 1, edges);
}

Graph complete_bipartite(int a, int b) {
    require(a >= 0 && b >= 0, "complete bipartite sides must be non-negative");
    return zykov_join(edgeless(a), edgeless(b));
}

Graph wheel(int n) { return zykov_join(complete(1), cycle(n)); }

Graph edgeless(int n) {
    require(n >= 0, "edgeless graph needs n >= 0");
    return Graph(n);
}

Graph zykov_join(const Graph& g, const Graph& h) {
    std::vector<Edge> edges = g.edges();
    const int shift = g.vertex_count();
    for (auto [u, v] : h.edges()) edges.emplace_back(u + shift, v + shift);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (Vertex v = 0; v < h.vertex_count(); ++v) edges.emplace_back(u, v + shift);
    }
    return Graph(g.vertex_count() + h.vertex_count(), edges);
}

Graph cross_polytope(int d) {
    require(d >= 0, "cross polytope needs d >= 0");
    Graph g = edgeless(2);
    for (int i = 0; i < d; ++i) g = zykov_join(g, edgeless(2));
    return g;
}

Graph octahedron() { return cross_polytope(2); }

Graph icosahedron() {
    // 0 apex, 1..5 upper ring, 6..10 lower ring, 11 bottom.
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        int up = 1 + i;
        int up_next = 1 + (i + 1) % 5;
        int low = 6 + i;
        int low_next = 6 + (i + 1) % 5;
        edges.emplace_back(0, up);
        edges.emplace_back(up, up_next);
        edges.emplace_back(low, low_next);
        edges.emplace_back(low, 11);
        edges.emplace_back(up, low);
        edges.emplace_back(up, low_next);
    }
    return Graph(12, edges);
}

Graph torus_grid(int m, int n) {
    require(m >= 4 && n >= 4, "torus_grid needs m, n >= 4");
    auto id = [&](int x, int y) { return mod(x, m) * n + mod(y, n); };
    std::vector<Edge> edges;
    for (int x = 0; x < m; ++x) {
        for (int y = 0; y < n; ++y) {
            edges.emplace_back(id(x, y), id(x + 1, y));
            edges.emplace_back(id(x, y), id(x, y + 1));
            edges.emplace_back(id(x, y), id(x + 1, y + 1));
        }
    }
    return Graph(m * n, edges);
}

Graph klein_bottle_grid(int m, int n) {
    require(m >= 4 && n >= 4, "klein_bottle_grid needs m, n >= 4");
    // Rows y in [0, n) are glued by g(x, y) = (y - x, y + n), which reverses
    // the x loop. No parity condition on m is needed; with a side of length 3
    // the quotient is not a surface (see the generator tests).
    auto id = [&](int x, int y) {
        while (y >= n) {
            x = y - n - x;
            y -= n;
        }
        while (y < 0) {
            x = y - x;
            y += n;
        }
        return mod(x, m) * n + y;
    };
    std::vector<Edge> edges;
    for (int x = 0; x < m; ++x) {
        for (int y = 0; y < n; ++y) {
            edges.emplace_back(id(x, y), id(x + 1, y));
            edges.emplace_back(id(x, y), id(x, y + 1));
            edges.emplace_back(id(x, y), id(x + 1, y + 1));
        }
    }
    Graph g;
    try {
        g = Graph(m * n, edges);
    } catch (const InputError&) {
        throw InputError("klein_bottle_grid: gluing produced a degenerate graph for these sizes");
    }
    auto rec = manifold_dimension(g);
    if (!rec.yes() || rec.dimension != 2 || euler_characteristic(g) != 0) {
        throw InputError("klein_bottle_grid: construction is not a surface with X = 0 for these sizes");
    }
    return g;
}

SimplicialComplex hemi_icosahedron() {
    return SimplicialComplex{{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                              {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}}};
}

Graph projective_plane() { return barycentric_of_complex(hemi_icosahedron()); }

Graph three_torus(int n) {
    require(n >= 5, "three_torus needs n >= 5");
    static constexpr std::array<std::array<int, 3>, 7> kSteps{{
        {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}}};
    auto id = [&](int x, int y, int z) { return (mod(x, n) * n + mod(y, n)) * n + mod(z, n); };
    std::vector<Edge> edges;
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            for (int z = 0; z < n; ++z) {
                for (const auto& s : kSteps) edges.emplace_back(id(x, y, z), id(x + s[0], y + s[1], z + s[2]));
            }
        }
    }
    return Graph(n * n * n, edges);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    require(n >= 0, "random_graph needs n >= 0");
    require(p >= 0.0 && p <= 1.0, "random_graph needs 0 <= p <= 1");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < p) edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

// --- complexes ---------------------------------------------------------------

void validate(const SimplicialComplex& c) {
    std::set<Vertex> seen;
    std::vector<std::vector<Vertex>> sorted;
    for (const auto& facet : c.facets) {
        require(!facet.empty(), "complex: empty facet");
        auto s = facet;
        std::sort(s.begin(), s.end());
        require(std::adjacent_find(s.begin(), s.end()) == s.end(), "complex: repeated vertex in a facet");
        require(s.front() >= 0, "complex: negative vertex id");
        require(s.size() <= 20, "complex: facet too large");
        seen.insert(s.begin(), s.end());
        sorted.push_back(std::move(s));
    }
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = 0; j < sorted.size(); ++j) {
            if (i == j) continue;
            bool contained = std::includes(sorted[j].begin(), sorted[j].end(), sorted[i].begin(), sorted[i].end());
            require(!contained, "complex: facet contained in another facet");
        }
    }
    require(seen.empty() || (*seen.rbegin() == static_cast<Vertex>(seen.size()) - 1),
            "complex: vertex ids are not dense");
}

namespace detail {

std::string face_label(const std::vector<Vertex>& face) {
    std::string s = "{";
    for (std::size_t i = 0; i < face.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(face[i]);
    }
    return s + "}";
}

Graph face_poset_graph(const std::vector<std::vector<Vertex>>& faces, std::vector<std::string> labels) {
    std::map<std::vector<Vertex>, int> index;
    for (std::size_t i = 0; i < faces.size(); ++i) index.emplace(faces[i], static_cast<int>(i));
    std::vector<Edge> edges;
    std::vector<Vertex> sub;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        const auto& face = faces[i];
        const std::uint32_t full = (std::uint32_t{1} << face.size()) - 1;
        for (std::uint32_t mask = 1; mask < full; ++mask) {
            sub.clear();
            for (std::size_t b = 0; b < face.size(); ++b) {
                if ((mask >> b) & 1u) sub.push_back(face[b]);
            }
            auto it = index.find(sub);
            if (it == index.end()) throw InputError("face family is not closed under taking subsets");
            edges.emplace_back(it->second, static_cast<int>(i));
        }
    }
    return Graph(static_cast<int>(faces.size()), edges, std::move(labels));
}

}  // namespace detail

Graph barycentric_of_complex(const SimplicialComplex& c) {
    validate(c);
    std::set<std::vector<Vertex>> faces;
    for (auto facet : c.facets) {
        std::sort(facet.begin(), facet.end());
        const std::uint32_t full = (std::uint32_t{1} << facet.size()) - 1;
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            std::vector<Vertex> face;
            for (std::size_t b = 0; b < facet.size(); ++b) {
                if ((mask >> b) & 1u) face.push_back(facet[b]);
            }
            faces.insert(std::move(face));
        }
    }
    std::vector<std::vector<Vertex>> ordered(faces.begin(), faces.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::vector<std::string> labels;
    labels.reserve(ordered.size());
    for (const auto& f : ordered) labels.push_back(detail::face_label(f));
    return detail::face_poset_graph(ordered, std::move(labels));
}

SimplicialComplex clique_complex(const Graph& g) {
    // A clique is maximal iff no vertex outside it is adjacent to all members.
    SimplicialComplex c;
    for_each_clique(g, [&](std::span<const Vertex> clique) {
        for (Vertex u : g.neighbors(clique.front())) {
            bool extends = std::find(clique.begin(), clique.end(), u) == clique.end() &&
                           std::all_of(clique.begin(), clique.end(), [&](Vertex w) { return g.adjacent(u, w); });
            if (extends) return;
        }
        c.facets.emplace_back(clique.begin(), clique.end());
    });
    return c;
}

SimplicialComplex connected_sum(const SimplicialComplex& a, const SimplicialComplex& b) {
    validate(a);
    validate(b);
    require(!a.facets.empty() && !b.facets.empty(), "connected_sum: empty complex");
    const auto& cut_a = a.facets.front();
    const auto& cut_b = b.facets.front();
    require(cut_a.size() == cut_b.size(), "connected_sum: glued facets differ in size");
    int a_vertices = 0;
    for (const auto& f : a.facets) a_vertices = std::max(a_vertices, *std::max_element(f.begin(), f.end()) + 1);
    std::map<Vertex, Vertex> remap;
    for (std::size_t i = 0; i < cut_b.size(); ++i) remap[cut_b[i]] = cut_a[i];
    int next = a_vertices;
    std::set<Vertex> b_vertices;
    for (const auto& f : b.facets) b_vertices.insert(f.begin(), f.end());
    for (Vertex v : b_vertices) {
        if (!remap.count(v)) remap[v] = next++;
    }
    SimplicialComplex out;
    out.facets.assign(a.facets.begin() + 1, a.facets.end());
    for (auto it = b.facets.begin() + 1; it != b.facets.end(); ++it) {
        std::vector<Vertex> f;
        for (Vertex v : *it) f.push_back(remap[v]);
        out.facets.push_back(std::move(f));
    }
    validate(out);
    return out;
}

}  // namespace arbor
