#include "arbor/arboricity.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "arbor/detail/max_flow.hpp"
#include "arbor/graph_io.hpp"

namespace arbor {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(at(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int x) {
        while (parent_[at(x)] != x) {
            parent_[at(x)] = parent_[at(parent_[at(x)])];
            x = parent_[at(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[at(a)] = b;
        return true;
    }

private:
    std::vector<int> parent_;
};

}  // namespace

bool is_valid_forest_partition(const Graph& g, const ForestPartition& p) {
    if (p.edges.size() != p.forest.size()) return false;
    if (static_cast<std::int64_t>(p.edges.size()) != g.edge_count()) return false;
    auto expected = g.edges();
    auto given = p.edges;
    for (auto& [u, v] : given) {
        if (u > v) std::swap(u, v);
    }
    std::sort(given.begin(), given.end());
    if (given != expected) return false;
    std::vector<UnionFind> forests(at(std::max(p.k, 0)), UnionFind(g.vertex_count()));
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        int f = p.forest[i];
        if (f < 0 || f >= p.k) return false;
        if (!forests[at(f)].unite(p.edges[i].first, p.edges[i].second)) return false;
    }
    return true;
}

// --- matroid partition -------------------------------------------------------

namespace {

/// k forests over a fixed edge list, grown one edge at a time by shortest
/// augmenting exchange sequences.
class MatroidPartition {
public:
    MatroidPartition(const Graph& g, int k)
        : n_(g.vertex_count()), k_(k), edges_(g.edges()), owner_(edges_.size(), -1),
          tree_adj_(at(k), std::vector<std::vector<std::pair<int, int>>>(at(n_))) {}

    bool run() {
        std::vector<UnionFind> greedy(at(k_), UnionFind(n_));
        std::vector<int> left;
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            auto [u, v] = edges_[e];
            int placed = -1;
            for (int f = 0; f < k_ && placed < 0; ++f) {
                if (greedy[at(f)].unite(u, v)) placed = f;
            }
            if (placed >= 0) {
                assign(static_cast<int>(e), placed);
            } else {
                left.push_back(static_cast<int>(e));
            }
        }
        for (int e : left) {
            if (!augment(e)) return false;
        }
        return true;
    }

    ForestPartition result() const {
        ForestPartition p;
        p.k = k_;
        p.edges = edges_;
        p.forest = owner_;
        return p;
    }

private:
    struct Rooted {
        std::vector<int> parent, parent_edge, depth, root;
    };

    void assign(int e, int f) {
        auto [u, v] = edges_[at(e)];
        if (owner_[at(e)] >= 0) {
            auto& forest = tree_adj_[at(owner_[at(e)])];
            std::erase(forest[at(u)], std::pair{v, e});
            std::erase(forest[at(v)], std::pair{u, e});
        }
        owner_[at(e)] = f;
        tree_adj_[at(f)][at(u)].emplace_back(v, e);
        tree_adj_[at(f)][at(v)].emplace_back(u, e);
    }

    Rooted root_forest(int f) const {
        Rooted r{std::vector<int>(at(n_), -1), std::vector<int>(at(n_), -1), std::vector<int>(at(n_), 0),
                 std::vector<int>(at(n_), -1)};
        std::vector<int> stack;
        for (int s = 0; s < n_; ++s) {
            if (r.root[at(s)] >= 0) continue;
            r.root[at(s)] = s;
            stack.push_back(s);
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (auto [w, e] : tree_adj_[at(f)][at(u)]) {
                    if (r.root[at(w)] >= 0) continue;
                    r.root[at(w)] = s;
                    r.parent[at(w)] = u;
                    r.parent_edge[at(w)] = e;
                    r.depth[at(w)] = r.depth[at(u)] + 1;
                    stack.push_back(w);
                }
            }
        }
        return r;
    }

    // Breadth-first search over edges. Popping x and trying forest f: if x
    // joins two trees of f, the exchange chain ending at x is applied;
    // otherwise every unlabeled edge y on the cycle x closes in f is labeled
    // with prev[y] = x (x may enter f once y leaves it).
    bool augment(int start) {
        std::vector<Rooted> rooted;
        rooted.reserve(at(k_));
        for (int f = 0; f < k_; ++f) rooted.push_back(root_forest(f));
        std::vector<int> prev(edges_.size(), -1);
        std::vector<bool> labeled(edges_.size(), false);
        labeled[at(start)] = true;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            auto [a, b] = edges_[at(x)];
            for (int f = 0; f < k_; ++f) {
                if (f == owner_[at(x)]) continue;
                const Rooted& r = rooted[at(f)];
                if (r.root[at(a)] != r.root[at(b)]) {
                    apply_chain(x, f, prev, start);
                    return true;
                }
                int u = a, w = b;
                while (u != w) {
                    int& deeper = r.depth[at(u)] >= r.depth[at(w)] ? u : w;
                    int y = r.parent_edge[at(deeper)];
                    if (!labeled[at(y)]) {
                        labeled[at(y)] = true;
                        prev[at(y)] = x;
                        queue.push_back(y);
                    }
                    deeper = r.parent[at(deeper)];
                }
            }
        }
        return false;
    }

    void apply_chain(int last, int target, const std::vector<int>& prev, int start) {
        int cur = last;
        while (true) {
            int old = owner_[at(cur)];
            assign(cur, target);
            if (cur == start) break;
            target = old;
            cur = prev[at(cur)];
        }
    }

    int n_;
    int k_;
    std::vector<Edge> edges_;
    std::vector<int> owner_;
    std::vector<std::vector<std::vector<std::pair<int, int>>>> tree_adj_;
};

}  // namespace

std::optional<ForestPartition> forest_partition(const Graph& g, int k) {
    if (k < 0) throw InputError("forest_partition: k must be non-negative");
    if (g.edge_count() == 0) return ForestPartition{k, {}, {}};
    if (k == 0) return std::nullopt;
    if (g.edge_count() > static_cast<std::int64_t>(k) * (g.vertex_count() - 1)) return std::nullopt;
    MatroidPartition mp(g, k);
    if (!mp.run()) return std::nullopt;
    ForestPartition p = mp.result();
    if (!is_valid_forest_partition(g, p)) throw std::logic_error("forest_partition produced an invalid certificate");
    return p;
}

// --- density -----------------------------------------------------------------

namespace {

std::int64_t induced_edges(const Graph& g, const VertexSet& w) {
    std::int64_t count = 0;
    for (Vertex v : w.members()) {
        for (Vertex u : g.neighbors(v)) count += (u > v && w.contains(u)) ? 1 : 0;
    }
    return count;
}

// Maximizes q*E_W - p*(|W|-1) over W containing `anchor` with all members
// >= anchor, as a maximum-weight closure: edge nodes worth q require both
// endpoints, vertices other than the anchor cost p.
std::pair<std::int64_t, VertexSet> anchored_closure(const Graph& g, const std::vector<Edge>& edges, Vertex anchor,
                                                    std::int64_t p, std::int64_t q) {
    const int n = g.vertex_count();
    const int source = 0, sink = 1;
    const int vertex_base = 2;
    const int edge_base = vertex_base + n;
    detail::MaxFlow flow(edge_base + static_cast<int>(edges.size()));
    std::int64_t positive = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u < anchor || v < anchor) continue;
        int node = edge_base + static_cast<int>(i);
        flow.add_arc(source, node, q);
        flow.add_arc(node, vertex_base + u, detail::MaxFlow::kInfinite);
        flow.add_arc(node, vertex_base + v, detail::MaxFlow::kInfinite);
        positive += q;
    }
    for (Vertex v = anchor + 1; v < n; ++v) flow.add_arc(vertex_base + v, sink, p);
    flow.add_arc(source, vertex_base + anchor, detail::MaxFlow::kInfinite);
    std::int64_t cut = flow.run(source, sink);
    auto side = flow.source_side(source);
    VertexSet w(n);
    for (Vertex v = anchor; v < n; ++v) {
        if (side[at(vertex_base + v)]) w.insert(v);
    }
    return {positive - cut, w};
}

}  // namespace

DensityWitness max_density(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw InputError("max_density needs at least two vertices");
    const auto edges = g.edges();
    DensityWitness best{ExactRatio(g.edge_count(), n - 1), VertexSet::all(n)};
    while (true) {
        // Current value is E_W/(|W|-1) with |W| <= n, so p and q stay small.
        const auto p = static_cast<std::int64_t>(numerator_of(best.value));
        const auto q = static_cast<std::int64_t>(denominator_of(best.value));
        std::int64_t top = 0;
        VertexSet improving;
        for (Vertex anchor = 0; anchor + 1 < n; ++anchor) {
            auto [value, w] = anchored_closure(g, edges, anchor, p, q);
            if (value > top) {
                top = value;
                improving = std::move(w);
            }
        }
        if (top <= 0) return best;
        ExactRatio next(induced_edges(g, improving), improving.size() - 1);
        if (next <= best.value) throw std::logic_error("max_density: closure did not improve the density");
        best = DensityWitness{next, std::move(improving)};
    }
}

ArboricityResult arboricity(const Graph& g) {
    ArboricityResult r;
    if (g.edge_count() == 0) {
        r.partition = ForestPartition{0, {}, {}};
        if (g.vertex_count() >= 2) r.density = max_density(g);
        return r;
    }
    r.density = max_density(g);
    int k = static_cast<int>(ceil(r.density->value));
    while (true) {
        if (auto p = forest_partition(g, k)) {
            r.k = k;
            r.partition = std::move(*p);
            return r;
        }
        ++k;
    }
}

// --- brute force -------------------------------------------------------------

namespace {

struct BruteForce {
    const std::vector<Edge>& edges;
    int n;
    int k;
    std::vector<std::vector<int>> comp;  // per forest component labels

    bool search(std::size_t i, int used) {
        if (i == edges.size()) return true;
        auto [u, v] = edges[i];
        const int limit = std::min(k, used + 1);  // forests are interchangeable
        for (int f = 0; f < limit; ++f) {
            auto& c = comp[at(f)];
            if (c[at(u)] == c[at(v)]) continue;
            const int from = c[at(v)], to = c[at(u)];
            std::vector<int> saved = c;
            for (auto& x : c) {
                if (x == from) x = to;
            }
            if (search(i + 1, std::max(used, f + 1))) return true;
            c = std::move(saved);
        }
        return false;
    }
};

}  // namespace

int brute_force_arboricity(const Graph& g, int max_edges) {
    if (g.edge_count() > max_edges) {
        throw InputError("brute_force_arboricity: " + std::to_string(g.edge_count()) + " edges exceeds cap of " +
                         std::to_string(max_edges));
    }
    const auto edges = g.edges();
    if (edges.empty()) return 0;
    for (int k = 1;; ++k) {
        std::vector<int> labels(at(g.vertex_count()));
        std::iota(labels.begin(), labels.end(), 0);
        BruteForce bf{edges, g.vertex_count(), k, std::vector<std::vector<int>>(at(k), labels)};
        if (bf.search(0, 0)) return k;
    }
}

ExactRatio phi(const Graph& g) {
    if (g.vertex_count() < 2) throw InputError("phi needs at least two vertices");
    return ExactRatio(g.edge_count(), g.vertex_count() - 1);
}

// --- conjecture explorer -----------------------------------------------------

namespace {

// Lexicographic order on the sorted member lists of two bitmasks.
bool lex_less(std::uint32_t a, std::uint32_t b) {
    while (a != 0 && b != 0) {
        int x = std::countr_zero(a), y = std::countr_zero(b);
        if (x != y) return x < y;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

VertexSet from_mask(int n, std::uint32_t mask) {
    VertexSet s(n);
    for (Vertex v = 0; v < n; ++v) {
        if ((mask >> v) & 1u) s.insert(v);
    }
    return s;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct Candidate {
    std::int64_t edges = 0;
    int size = 0;
    std::vector<char> members;
    std::int64_t index = -1;

    // E/(size-1) comparison by cross-multiplication.
    bool beats(const Candidate& other) const {
        if (other.size < 2) return size >= 2;
        if (size < 2) return false;
        return edges * (other.size - 1) > other.edges * (size - 1);
    }
};

// Local search from `start`: apply the best strictly improving single-vertex
// toggle until none remains.
Candidate climb(const Graph& g, std::vector<char> members) {
    const int n = g.vertex_count();
    Candidate c;
    c.members = std::move(members);
    std::vector<int> inside_degree(at(n), 0);
    for (Vertex v = 0; v < n; ++v) {
        if (!c.members[at(v)]) continue;
        ++c.size;
        for (Vertex u : g.neighbors(v)) inside_degree[at(u)] += 1;
    }
    for (Vertex v = 0; v < n; ++v) c.edges += c.members[at(v)] ? inside_degree[at(v)] : 0;
    c.edges /= 2;
    while (true) {
        Vertex best_move = -1;
        Candidate best = c;
        for (Vertex v = 0; v < n; ++v) {
            Candidate trial;
            if (c.members[at(v)]) {
                if (c.size <= 2) continue;
                trial.edges = c.edges - inside_degree[at(v)];
                trial.size = c.size - 1;
            } else {
                trial.edges = c.edges + inside_degree[at(v)];
                trial.size = c.size + 1;
            }
            if (trial.beats(best)) {
                best.edges = trial.edges;
                best.size = trial.size;
                best_move = v;
            }
        }
        if (best_move < 0) return c;
        const bool adding = !c.members[at(best_move)];
        c.members[at(best_move)] = adding ? 1 : 0;
        c.edges = best.edges;
        c.size = best.size;
        for (Vertex u : g.neighbors(best_move)) inside_degree[at(u)] += adding ? 1 : -1;
    }
}

Candidate sample(const Graph& g, std::uint64_t seed, std::int64_t index) {
    const int n = g.vertex_count();
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(index))));
    std::vector<char> members(at(n), 0);
    int size = 0;
    for (Vertex v = 0; v < n; ++v) {
        members[at(v)] = static_cast<char>(rng() & 1u);
        size += members[at(v)];
    }
    for (Vertex v = 0; size < 2 && v < n; ++v) {
        if (!members[at(v)]) {
            members[at(v)] = 1;
            ++size;
        }
    }
    Candidate c = climb(g, std::move(members));
    c.index = index;
    return c;
}

}  // namespace

ConjectureReport phi_maximality_check(const Graph& g, std::string graph_id) {
    const int n = g.vertex_count();
    if (n < 2) throw InputError("phi_maximality_check needs at least two vertices");
    if (n > kExhaustiveGuard) {
        throw InputError("exhaustive phi check is limited to " + std::to_string(kExhaustiveGuard) +
                         " vertices; use sampled mode");
    }
    std::vector<std::uint32_t> adj(at(n), 0);
    for (auto [u, v] : g.edges()) {
        adj[at(u)] |= 1u << v;
        adj[at(v)] |= 1u << u;
    }
    std::int64_t best_edges = 0;
    int best_size = 0;
    std::uint32_t best_mask = 0;
    std::uint32_t mask = 0;
    std::int64_t edges = 0;
    const std::uint64_t total = std::uint64_t{1} << n;
    // Gray-code walk: step i toggles the lowest set bit of i.
    for (std::uint64_t i = 1; i < total; ++i) {
        const int v = std::countr_zero(i);
        const std::uint32_t bit = 1u << v;
        const auto touched = static_cast<std::int64_t>(std::popcount(adj[at(v)] & mask));
        if (mask & bit) {
            mask &= ~bit;
            edges -= touched;
        } else {
            mask |= bit;
            edges += touched;
        }
        const int size = std::popcount(mask);
        if (size < 2) continue;
        const std::int64_t lhs = edges * (best_size - 1);
        const std::int64_t rhs = best_edges * (size - 1);
        if (best_size < 2 || lhs > rhs || (lhs == rhs && lex_less(mask, best_mask))) {
            best_edges = edges;
            best_size = size;
            best_mask = mask;
        }
    }
    ConjectureReport r;
    r.graph_id = std::move(graph_id);
    r.phi_global = phi(g);
    r.best_sub_phi = ExactRatio(best_edges, best_size - 1);
    r.best_sub_witness = from_mask(n, best_mask);
    r.mode = SearchMode::Exhaustive;
    r.counterexample = r.best_sub_phi > r.phi_global;
    return r;
}

ConjectureReport phi_maximality_check(const Graph& g, const SampledSearch& search, std::string graph_id) {
    const int n = g.vertex_count();
    if (n < 2) throw InputError("phi_maximality_check needs at least two vertices");
    if (search.samples < 1) throw InputError("sampled search needs a positive sample budget");
    const int jobs = std::max(1, std::min<int>(search.jobs, static_cast<int>(std::min<std::int64_t>(search.samples, 256))));
    std::vector<Candidate> winners(at(jobs));
    auto work = [&](int worker) {
        Candidate best;
        for (std::int64_t i = worker; i < search.samples; i += jobs) {
            Candidate c = sample(g, search.seed, i);
            if (c.beats(best)) best = std::move(c);
        }
        winners[at(worker)] = std::move(best);
    };
    std::vector<std::thread> threads;
    for (int w = 1; w < jobs; ++w) threads.emplace_back(work, w);
    work(0);
    for (auto& t : threads) t.join();
    // Ties go to the lowest sample index, independent of worker count.
    Candidate best;
    for (auto& c : winners) {
        if (c.beats(best) || (c.size >= 2 && !best.beats(c) && c.index < best.index)) best = std::move(c);
    }
    ConjectureReport r;
    r.graph_id = std::move(graph_id);
    r.phi_global = phi(g);
    r.best_sub_phi = ExactRatio(best.edges, best.size - 1);
    r.best_sub_witness = VertexSet(n);
    for (Vertex v = 0; v < n; ++v) {
        if (best.members[at(v)]) r.best_sub_witness.insert(v);
    }
    r.mode = SearchMode::Sampled;
    r.counterexample = r.best_sub_phi > r.phi_global;
    return r;
}

// --- JSON --------------------------------------------------------------------

nlohmann::json to_json(const ForestPartition& p) {
    nlohmann::json list = nlohmann::json::array();
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        list.push_back({{"edge", {p.edges[i].first, p.edges[i].second}}, {"forest", p.forest[i]}});
    }
    return list;
}

nlohmann::json to_json(const DensityWitness& d) {
    return {{"value", to_json(d.value)}, {"witness", d.witness.members()}};
}

nlohmann::json to_json(const ConjectureReport& r) {
    return {{"graph", r.graph_id},
            {"phi_global", to_json(r.phi_global)},
            {"best_sub_phi", to_json(r.best_sub_phi)},
            {"best_sub_witness", r.best_sub_witness.members()},
            {"mode", r.mode == SearchMode::Exhaustive ? "exhaustive" : "sampled"},
            {"verdict", r.counterexample ? "counterexample" : "holds"}};
}

}  // namespace arbor
