#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace arbor::detail {

/// Dinic max-flow over integer capacities.
class MaxFlow {
public:
    using Cap = std::int64_t;
    static constexpr Cap kInfinite = std::numeric_limits<Cap>::max() / 4;

    explicit MaxFlow(int nodes) : head_(static_cast<std::size_t>(nodes), -1) {}

    int add_arc(int from, int to, Cap cap) {
        int id = static_cast<int>(arcs_.size());
        arcs_.push_back({to, head_[idx(from)], cap});
        head_[idx(from)] = id;
        arcs_.push_back({from, head_[idx(to)], 0});
        head_[idx(to)] = id + 1;
        return id;
    }

    /// Runs until no augmenting path remains or `limit` units have been pushed.
    Cap run(int source, int sink, Cap limit = kInfinite) {
        Cap total = 0;
        while (total < limit && levelize(source, sink)) {
            iter_.assign(head_.begin(), head_.end());
            while (total < limit) {
                Cap pushed = push(source, sink, limit - total);
                if (pushed == 0) break;
                total += pushed;
            }
        }
        return total;
    }

    /// Nodes reachable from `source` in the residual network after run().
    std::vector<bool> source_side(int source) const {
        std::vector<bool> seen(head_.size(), false);
        std::vector<int> stack{source};
        seen[idx(source)] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int a = head_[idx(u)]; a != -1; a = arcs_[idx(a)].next) {
                const Arc& arc = arcs_[idx(a)];
                if (arc.cap > 0 && !seen[idx(arc.to)]) {
                    seen[idx(arc.to)] = true;
                    stack.push_back(arc.to);
                }
            }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        int next;
        Cap cap;
    };

    static std::size_t idx(int i) { return static_cast<std::size_t>(i); }

    bool levelize(int source, int sink) {
        level_.assign(head_.size(), -1);
        std::queue<int> q;
        level_[idx(source)] = 0;
        q.push(source);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int a = head_[idx(u)]; a != -1; a = arcs_[idx(a)].next) {
                const Arc& arc = arcs_[idx(a)];
                if (arc.cap > 0 && level_[idx(arc.to)] < 0) {
                    level_[idx(arc.to)] = level_[idx(u)] + 1;
                    q.push(arc.to);
                }
            }
        }
        return level_[idx(sink)] >= 0;
    }

    Cap push(int u, int sink, Cap limit) {
        if (u == sink) return limit;
        for (int& a = iter_[idx(u)]; a != -1; a = arcs_[idx(a)].next) {
            Arc& arc = arcs_[idx(a)];
            if (arc.cap <= 0 || level_[idx(arc.to)] != level_[idx(u)] + 1) continue;
            Cap got = push(arc.to, sink, std::min(limit, arc.cap));
            if (got > 0) {
                arc.cap -= got;
                arcs_[idx(a ^ 1)].cap += got;
                return got;
            }
        }
        return 0;
    }

    std::vector<int> head_;
    std::vector<Arc> arcs_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

}  // namespace arbor::detail
