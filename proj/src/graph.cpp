#include "arbor/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "arbor/detail/max_flow.hpp"

namespace arbor {

namespace {

std::size_t at(Vertex v) { return static_cast<std::size_t>(v); }

void check_endpoint(int n, Vertex v) {
    if (v < 0 || v >= n) {
        throw InputError("edge endpoint " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
    }
}

}  // namespace

Graph::Graph(int vertex_count) {
    if (vertex_count < 0) throw InputError("negative vertex count");
    adj_.resize(at(vertex_count));
}

Graph::Graph(int vertex_count, std::span<const Edge> edges, std::vector<std::string> labels)
    : Graph(vertex_count) {
    for (auto [u, v] : edges) {
        check_endpoint(vertex_count, u);
        check_endpoint(vertex_count, v);
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        adj_[at(u)].push_back(v);
        adj_[at(v)].push_back(u);
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
            throw InputError("duplicate edge");
        }
    }
    edge_count_ = static_cast<std::int64_t>(edges.size());
    if (!labels.empty() && static_cast<int>(labels.size()) != vertex_count) {
        throw InputError("label count does not match vertex count");
    }
    labels_ = std::move(labels);
}

Graph Graph::from_edges_dedup(int vertex_count, std::span<const Edge> edges,
                              std::vector<std::string> labels) {
    std::vector<Edge> normalized;
    normalized.reserve(edges.size());
    for (auto [u, v] : edges) normalized.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(normalized.begin(), normalized.end());
    normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());
    return Graph(vertex_count, normalized, std::move(labels));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    const auto& list = adj_[at(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (Vertex u = 0; u < vertex_count(); ++u) {
        for (Vertex v : adj_[at(u)]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

// --- VertexSet ---------------------------------------------------------------

VertexSet::VertexSet(int universe)
    : universe_(universe), words_((static_cast<std::size_t>(universe) + 63) / 64, 0) {}

VertexSet VertexSet::all(int universe) {
    VertexSet s(universe);
    for (Vertex v = 0; v < universe; ++v) s.insert(v);
    return s;
}

VertexSet VertexSet::of(int universe, std::span<const Vertex> members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
}

void VertexSet::insert(Vertex v) {
    if (v < 0 || v >= universe_) throw InputError("vertex " + std::to_string(v) + " outside vertex set universe");
    words_[word(v)] |= (std::uint64_t{1} << bit(v));
}

void VertexSet::erase(Vertex v) {
    if (v < 0 || v >= universe_) return;
    words_[word(v)] &= ~(std::uint64_t{1} << bit(v));
}

int VertexSet::size() const {
    int total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w != 0) {
            int b = std::countr_zero(w);
            out.push_back(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(b)));
            w &= w - 1;
        }
    }
    return out;
}

std::size_t VertexSet::hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(universe_);
    for (auto w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

// --- FVector -----------------------------------------------------------------

std::int64_t FVector::euler_characteristic() const {
    std::int64_t x = 0;
    for (std::size_t k = 0; k < counts.size(); ++k) x += (k % 2 == 0) ? counts[k] : -counts[k];
    return x;
}

// --- subgraphs ---------------------------------------------------------------

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> w) {
    std::vector<int> local(at(g.vertex_count()), -1);
    Subgraph out;
    for (Vertex v : w) {
        if (!g.has_vertex(v)) throw InputError("vertex " + std::to_string(v) + " not in graph");
        if (local[at(v)] >= 0) continue;
        local[at(v)] = static_cast<int>(out.to_ambient.size());
        out.to_ambient.push_back(v);
    }
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < out.to_ambient.size(); ++i) {
        Vertex v = out.to_ambient[i];
        for (Vertex u : g.neighbors(v)) {
            int j = local[at(u)];
            if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
        }
        if (g.has_labels()) labels.push_back(g.labels()[at(v)]);
    }
    out.graph = Graph(static_cast<int>(out.to_ambient.size()), edges, std::move(labels));
    return out;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& w) {
    if (w.universe() != g.vertex_count()) throw InputError("vertex set universe does not match graph");
    auto members = w.members();
    return induced_subgraph(g, members);
}

Graph unit_sphere(const Graph& g, Vertex v) {
    if (!g.has_vertex(v)) throw InputError("unit_sphere: invalid vertex " + std::to_string(v));
    return induced_subgraph(g, g.neighbors(v)).graph;
}

// --- cliques -----------------------------------------------------------------

namespace {

// Extends `clique` by candidates (all adjacent to every clique member, ids
// greater than the last member) in increasing order.
template <class Visit>
void expand(const Graph& g, std::vector<Vertex>& clique, const std::vector<Vertex>& candidates,
            Visit& visit, std::int64_t& budget) {
    std::vector<Vertex> next;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        Vertex v = candidates[i];
        if (--budget < 0) throw BudgetError("clique enumeration exceeded its cap");
        clique.push_back(v);
        visit(std::span<const Vertex>(clique));
        next.clear();
        auto nb = g.neighbors(v);
        std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(i) + 1, candidates.end(),
                              nb.begin(), nb.end(), std::back_inserter(next));
        if (!next.empty()) expand(g, clique, next, visit, budget);
        clique.pop_back();
    }
}

template <class Visit>
void enumerate(const Graph& g, const std::vector<Vertex>& roots, Visit&& visit, std::int64_t cap) {
    std::int64_t budget = cap;
    std::vector<Vertex> clique;
    expand(g, clique, roots, visit, budget);
}

FVector counts_from(const Graph& g, const std::vector<Vertex>& roots, std::int64_t cap) {
    FVector f;
    enumerate(
        g, roots,
        [&](std::span<const Vertex> c) {
            if (f.counts.size() < c.size()) f.counts.resize(c.size(), 0);
            ++f.counts[c.size() - 1];
        },
        cap);
    return f;
}

}  // namespace

void for_each_clique(const Graph& g, const std::function<void(std::span<const Vertex>)>& visit,
                     std::int64_t cap) {
    std::vector<Vertex> roots(at(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) roots[at(v)] = v;
    enumerate(g, roots, visit, cap);
}

FVector f_vector(const Graph& g, std::int64_t cap) {
    std::vector<Vertex> roots(at(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) roots[at(v)] = v;
    return counts_from(g, roots, cap);
}

FVector f_vector(const Graph& g, const VertexSet& w, std::int64_t cap) {
    // Restricting the root candidates is enough: every deeper candidate list
    // is an intersection with an earlier one.
    return counts_from(g, w.members(), cap);
}

std::int64_t euler_characteristic(const Graph& g, std::int64_t cap) {
    return f_vector(g, cap).euler_characteristic();
}

// --- connectivity ------------------------------------------------------------

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return false;
    std::vector<bool> seen(at(n), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex v : g.neighbors(u)) {
            if (!seen[at(v)]) {
                seen[at(v)] = true;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n;
}

namespace {

// Number of internally vertex-disjoint s-t paths, capped at `limit`.
// s and t must be distinct and non-adjacent.
int local_connectivity(const Graph& g, Vertex s, Vertex t, int limit) {
    const int n = g.vertex_count();
    // Vertex v splits into in-node 2v and out-node 2v+1.
    detail::MaxFlow flow(2 * n);
    for (Vertex v = 0; v < n; ++v) {
        bool terminal = (v == s || v == t);
        flow.add_arc(2 * v, 2 * v + 1, terminal ? detail::MaxFlow::kInfinite : 1);
        for (Vertex u : g.neighbors(v)) flow.add_arc(2 * v + 1, 2 * u, 1);
    }
    return static_cast<int>(flow.run(2 * s + 1, 2 * t, limit));
}

}  // namespace

bool vertex_connectivity_at_least(const Graph& g, int k) {
    if (k <= 0) return true;
    const int n = g.vertex_count();
    const bool complete = g.edge_count() == static_cast<std::int64_t>(n) * (n - 1) / 2;
    if (n <= k) return n == k && complete;
    if (complete) return true;
    // Any separator with fewer than k vertices misses one of the first k
    // vertices; that vertex is then cut off from some non-neighbor.
    for (Vertex s = 0; s < k; ++s) {
        for (Vertex t = 0; t < n; ++t) {
            if (t == s || g.adjacent(s, t)) continue;
            if (local_connectivity(g, s, t, k) < k) return false;
        }
    }
    return true;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    const int shift = a.vertex_count();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
    std::vector<std::string> labels;
    if (a.has_labels() || b.has_labels()) {
        for (Vertex v = 0; v < a.vertex_count(); ++v) labels.push_back(a.has_labels() ? a.labels()[at(v)] : "");
        for (Vertex v = 0; v < b.vertex_count(); ++v) labels.push_back(b.has_labels() ? b.labels()[at(v)] : "");
    }
    return Graph(a.vertex_count() + b.vertex_count(), edges, std::move(labels));
}

Graph remove_vertex(const Graph& g, Vertex v) {
    if (!g.has_vertex(v)) throw InputError("remove_vertex: invalid vertex");
    std::vector<Vertex> keep;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        if (u != v) keep.push_back(u);
    }
    return induced_subgraph(g, keep).graph;
}

}  // namespace arbor
