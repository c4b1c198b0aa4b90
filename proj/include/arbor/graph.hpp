#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "arbor/exact.hpp"

namespace arbor {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph over dense vertex ids 0..n-1.
///
/// Immutable once built: neighbor lists are sorted and symmetric, and no
/// self-loops are present. Optional per-vertex labels carry provenance for
/// generated or refined vertices and do not take part in equality.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);

    /// Builds from an edge list. Throws InputError on loops, duplicates or
    /// out-of-range endpoints.
    Graph(int vertex_count, std::span<const Edge> edges, std::vector<std::string> labels = {});

    /// Builds from an edge list, silently merging duplicate edges.
    static Graph from_edges_dedup(int vertex_count, std::span<const Edge> edges,
                                  std::vector<std::string> labels = {});

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    std::int64_t edge_count() const { return edge_count_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    bool has_vertex(Vertex v) const { return v >= 0 && v < vertex_count(); }
    bool adjacent(Vertex u, Vertex v) const;

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    const std::vector<std::string>& labels() const { return labels_; }
    bool has_labels() const { return !labels_.empty(); }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::string> labels_;
    std::int64_t edge_count_ = 0;
};

/// Membership bitset over the vertices of an ambient graph.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);
    static VertexSet all(int universe);
    static VertexSet of(int universe, std::span<const Vertex> members);

    int universe() const { return universe_; }
    bool contains(Vertex v) const {
        return v >= 0 && v < universe_ && ((words_[word(v)] >> bit(v)) & 1u) != 0;
    }
    void insert(Vertex v);
    void erase(Vertex v);
    int size() const;
    bool empty() const { return size() == 0; }
    std::vector<Vertex> members() const;

    /// Hash over the ambient id order; no isomorphism invariance.
    std::size_t hash() const;

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

private:
    static std::size_t word(Vertex v) { return static_cast<std::size_t>(v) >> 6; }
    static unsigned bit(Vertex v) { return static_cast<unsigned>(v) & 63u; }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

/// Counts (f_0, ..., f_d) of complete subgraphs by dimension.
struct FVector {
    std::vector<std::int64_t> counts;

    int dimension() const { return static_cast<int>(counts.size()) - 1; }
    std::int64_t operator[](std::size_t k) const { return k < counts.size() ? counts[k] : 0; }
    std::int64_t euler_characteristic() const;
    friend bool operator==(const FVector&, const FVector&) = default;
};

/// Induced subgraph together with the map from new ids back to ambient ids.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> to_ambient;
};

/// Default cap on the number of enumerated cliques.
inline constexpr std::int64_t kDefaultCliqueCap = 10'000'000;

Subgraph induced_subgraph(const Graph& g, const VertexSet& w);
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> w);

/// Graph induced by the neighbors of v (v excluded).
Graph unit_sphere(const Graph& g, Vertex v);

/// Calls `visit` with every complete subgraph (sorted vertex list), including
/// single vertices. Throws BudgetError after `cap` cliques.
void for_each_clique(const Graph& g, const std::function<void(std::span<const Vertex>)>& visit,
                     std::int64_t cap = kDefaultCliqueCap);

FVector f_vector(const Graph& g, std::int64_t cap = kDefaultCliqueCap);

/// f-vector of the subgraph induced by `w`, without materializing it.
FVector f_vector(const Graph& g, const VertexSet& w, std::int64_t cap = kDefaultCliqueCap);

std::int64_t euler_characteristic(const Graph& g, std::int64_t cap = kDefaultCliqueCap);

/// Empty graph counts as not connected.
bool is_connected(const Graph& g);

/// True iff deleting any k-1 or fewer vertices leaves a connected graph.
/// K_n is n-connected and not (n+1)-connected.
bool vertex_connectivity_at_least(const Graph& g, int k);

Graph disjoint_union(const Graph& a, const Graph& b);

/// Copy of g with v and its incident edges removed; ids above v shift down.
Graph remove_vertex(const Graph& g, Vertex v);

}  // namespace arbor
