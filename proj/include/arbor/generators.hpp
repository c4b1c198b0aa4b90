#pragma once

#include <cstdint>
#include <vector>

#include "arbor/graph.hpp"

namespace arbor {

/// Abstract simplicial complex given by its facets (maximal faces).
struct SimplicialComplex {
    std::vector<std::vector<Vertex>> facets;
};

Graph cycle(int n);
Graph complete(int n);
Graph path(int n);
Graph star(int leaves);
Graph complete_bipartite(int a, int b);
/// Cone over the n-cycle.
Graph wheel(int n);
/// n isolated vertices.
Graph edgeless(int n);

/// Disjoint union plus every edge between the two parts. f-polynomials multiply.
Graph zykov_join(const Graph& g, const Graph& h);

/// (d+1)-fold join of the 0-sphere; the smallest d-sphere.
Graph cross_polytope(int d);
Graph octahedron();
Graph icosahedron();

/// Triangulated m x n torus: Z_m x Z_n with steps (1,0), (0,1), (1,1). m, n >= 4.
Graph torus_grid(int m, int n);

/// Same lattice glued along a glide reflection that preserves the diagonal
/// steps. m, n >= 4. Self-validates as a surface with X = 0.
Graph klein_bottle_grid(int m, int n);

/// Barycentric refinement of the 6-vertex hemi-icosahedron: V=31, E=90, F=60, X=1.
Graph projective_plane();

/// Freudenthal triangulation of Z_n^3 (7 steps and their negatives). n >= 5.
Graph three_torus(int n);

/// Erdos-Renyi G(n, p) from a fixed seed; identical output on every platform.
Graph random_graph(int n, double p, std::uint64_t seed);

/// Faces of `c` as vertices, strict containment as edges; labels name the face.
Graph barycentric_of_complex(const SimplicialComplex& c);

SimplicialComplex hemi_icosahedron();

/// Maximal cliques of g as facets.
SimplicialComplex clique_complex(const Graph& g);

/// Glues two pure complexes along the boundary of their first facets, which
/// are removed. Facet vertex lists must have equal length.
SimplicialComplex connected_sum(const SimplicialComplex& a, const SimplicialComplex& b);

/// Throws InputError unless facets are non-empty, duplicate-free, pairwise
/// non-contained and cover the ids 0..n-1.
void validate(const SimplicialComplex& c);

}  // namespace arbor
