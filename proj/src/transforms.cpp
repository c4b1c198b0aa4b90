#include "arbor/transforms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "arbor/detail/face_poset.hpp"

namespace arbor {

Graph barycentric_refinement(const Graph& g, std::int64_t cap) {
    std::vector<std::vector<Vertex>> cliques;
    for_each_clique(g, [&](std::span<const Vertex> c) { cliques.emplace_back(c.begin(), c.end()); }, cap);
    std::stable_sort(cliques.begin(), cliques.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::vector<std::string> labels;
    labels.reserve(cliques.size());
    for (const auto& c : cliques) labels.push_back(std::to_string(c.size() - 1) + ":" + detail::face_label(c));
    return detail::face_poset_graph(cliques, std::move(labels));
}

Eigen::Matrix<std::int64_t, 5, 1> operator_check(const Graph& g, std::int64_t cap) {
    const FVector f = f_vector(g, cap);
    if (f.dimension() > 4) throw InputError("operator_check: graph dimension exceeds 4");
    Eigen::Matrix<std::int64_t, 5, 1> before = Eigen::Matrix<std::int64_t, 5, 1>::Zero();
    Eigen::Matrix<std::int64_t, 5, 1> after = Eigen::Matrix<std::int64_t, 5, 1>::Zero();
    for (int i = 0; i <= f.dimension(); ++i) before(i) = f.counts[static_cast<std::size_t>(i)];
    const FVector refined = f_vector(barycentric_refinement(g, cap), cap);
    for (int i = 0; i <= refined.dimension() && i < 5; ++i) after(i) = refined.counts[static_cast<std::size_t>(i)];
    if (refined.dimension() > 4) throw std::logic_error("operator_check: refinement raised the dimension");
    return after - barycentric_operator<std::int64_t>(4) * before;
}

std::pair<ExactRatio, ExactRatio> phi_refinement_trend(const Graph& g, RecognitionBudget budget) {
    auto rec = manifold_dimension(g, budget);
    if (!rec.yes() || rec.dimension != 2) throw InputError("phi_refinement_trend: input is not a 2-manifold");
    const Graph refined = barycentric_refinement(g, budget.clique_cap);
    return {ExactRatio(g.edge_count(), g.vertex_count() - 1),
            ExactRatio(refined.edge_count(), refined.vertex_count() - 1)};
}

namespace {

void require_edge(const Graph& g, Edge e) {
    if (!g.has_vertex(e.first) || !g.has_vertex(e.second) || !g.adjacent(e.first, e.second)) {
        throw InputError("(" + std::to_string(e.first) + ", " + std::to_string(e.second) + ") is not an edge");
    }
}

std::vector<Vertex> common_neighbors(const Graph& g, Edge e) {
    auto a = g.neighbors(e.first);
    auto b = g.neighbors(e.second);
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Link vertices in cyclic order, starting at the smallest and stepping to its
// smaller neighbor. Throws unless the link is a single cycle of length >= 4.
std::vector<Vertex> link_cycle(const Graph& g, Edge e) {
    const auto link = common_neighbors(g, e);
    const Subgraph sub = induced_subgraph(g, link);
    const Graph& c = sub.graph;
    const int n = c.vertex_count();
    bool two_regular = n >= 4;
    for (Vertex v = 0; two_regular && v < n; ++v) two_regular = c.degree(v) == 2;
    if (!two_regular || !is_connected(c)) throw InputError("edge link is not a cycle of length >= 4");
    std::vector<Vertex> order{0};
    Vertex prev = -1, cur = 0;
    for (int i = 1; i < n; ++i) {
        auto nb = c.neighbors(cur);
        Vertex next = (prev == -1) ? std::min(nb[0], nb[1]) : (nb[0] == prev ? nb[1] : nb[0]);
        prev = cur;
        cur = next;
        order.push_back(cur);
    }
    for (auto& v : order) v = sub.to_ambient[static_cast<std::size_t>(v)];
    return order;
}

}  // namespace

Graph edge_link(const Graph& g, Edge e) {
    require_edge(g, e);
    return induced_subgraph(g, common_neighbors(g, e)).graph;
}

int edge_degree(const Graph& g, Edge e) {
    require_edge(g, e);
    return static_cast<int>(common_neighbors(g, e).size());
}

Subdivision edge_subdivide(const Graph& g, Edge e, bool validate, RecognitionBudget budget) {
    require_edge(g, e);
    const auto link = link_cycle(g, e);
    const Vertex mid = g.vertex_count();
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        if (!((u == e.first && v == e.second) || (u == e.second && v == e.first))) edges.emplace_back(u, v);
    }
    edges.emplace_back(e.first, mid);
    edges.emplace_back(e.second, mid);
    for (Vertex x : link) edges.emplace_back(x, mid);
    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels = g.labels();
        labels.push_back("mid:" + std::to_string(e.first) + "-" + std::to_string(e.second));
    }
    Subdivision s{Graph(mid + 1, edges, std::move(labels)), mid, static_cast<int>(link.size())};
    if (validate) {
        auto rec = manifold_dimension(s.graph, budget);
        if (!rec.yes() || rec.dimension != 3) throw std::logic_error("edge_subdivide: result is not a 3-manifold");
    }
    return s;
}

namespace {

bool above(const Graph& g, int target) {
    return g.edge_count() > static_cast<std::int64_t>(target) * (g.vertex_count() - 1);
}

void check_three_manifold(const Graph& g, const RecognitionBudget& budget, const char* what) {
    auto rec = manifold_dimension(g, budget);
    if (rec.verdict == Verdict::Unknown) throw BudgetError(std::string(what) + ": recognition budget exhausted");
    if (!rec.yes() || rec.dimension != 3) throw InputError(std::string(what) + ": graph is not a 3-manifold");
}

}  // namespace

InflationResult inflate_arboricity(const Graph& g, int target, const InflationOptions& options) {
    if (target < 1) throw InputError("inflate_arboricity: target must be positive");
    check_three_manifold(g, options.budget, "inflate_arboricity");
    InflationResult result{g, g.edges().front(), 0, {}};
    Edge& pivot = result.pivot;
    result.pivot_degree = edge_degree(g, pivot);
    if (above(g, target)) return result;

    auto record = [&](int phase, Edge e, const Graph& before, const Subdivision& s) {
        result.steps.push_back({phase, e, s.graph.vertex_count() - before.vertex_count(),
                                s.graph.edge_count() - before.edge_count(), s.link_size});
        if (options.validate_every > 0 && result.steps.size() % static_cast<std::size_t>(options.validate_every) == 0) {
            auto rec = manifold_dimension(s.graph, options.budget);
            if (!rec.yes() || rec.dimension != 3) throw std::logic_error("inflate_arboricity: lost the 3-manifold property");
        }
    };

    auto guard = [&] {
        if (static_cast<std::int64_t>(result.steps.size()) >= options.max_steps) {
            throw BudgetError("inflate_arboricity: step budget exhausted after " +
                              std::to_string(result.steps.size()) + " subdivisions with E/(V-1) = " +
                              to_string(ExactRatio(result.graph.edge_count(), result.graph.vertex_count() - 1)));
        }
    };

    // Phase 1: each link-edge subdivision adds one vertex to the pivot's link.
    for (std::size_t round = 0; result.pivot_degree <= target; ++round) {
        guard();
        const auto cycle = link_cycle(result.graph, pivot);
        const std::size_t i = round % cycle.size();
        const Edge link_edge{cycle[i], cycle[(i + 1) % cycle.size()]};
        Subdivision s = edge_subdivide(result.graph, link_edge);
        record(1, link_edge, result.graph, s);
        result.graph = std::move(s.graph);
        result.pivot_degree = edge_degree(result.graph, pivot);
    }

    // Phase 2: the child edge (a, mid) keeps the link of (a, b).
    while (!above(result.graph, target)) {
        guard();
        Subdivision s = edge_subdivide(result.graph, pivot);
        record(2, pivot, result.graph, s);
        result.graph = std::move(s.graph);
        pivot = Edge{pivot.first, s.midpoint};
    }
    result.pivot_degree = edge_degree(result.graph, pivot);
    return result;
}

}  // namespace arbor
