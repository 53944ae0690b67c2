#pragma once

// Dinic's algorithm with integer capacities.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace sepminor::detail {

class MaxFlow {
public:
    static constexpr std::int64_t kInfinite = std::numeric_limits<std::int64_t>::max() / 4;

    explicit MaxFlow(int nodes) : graph_(static_cast<std::size_t>(nodes)), level_(graph_.size()), next_(graph_.size()) {}

    void add_edge(int from, int to, std::int64_t capacity) {
        graph_[from].push_back({to, static_cast<int>(graph_[to].size()), capacity});
        graph_[to].push_back({from, static_cast<int>(graph_[from].size()) - 1, 0});
    }

    std::int64_t run(int source, int sink) {
        std::int64_t total = 0;
        while (levels(source, sink)) {
            std::fill(next_.begin(), next_.end(), 0);
            while (const std::int64_t pushed = augment(source, sink, kInfinite)) total += pushed;
        }
        return total;
    }

    /// Nodes reachable from `source` in the residual graph after run().
    [[nodiscard]] std::vector<char> source_side(int source) const {
        std::vector<char> seen(graph_.size(), 0);
        std::vector<int> stack{source};
        seen[source] = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (const auto& e : graph_[u])
                if (e.capacity > 0 && !seen[e.to]) {
                    seen[e.to] = 1;
                    stack.push_back(e.to);
                }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        int reverse;
        std::int64_t capacity;
    };

    bool levels(int source, int sink) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> queue;
        level_[source] = 0;
        queue.push(source);
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop();
            for (const auto& e : graph_[u])
                if (e.capacity > 0 && level_[e.to] < 0) {
                    level_[e.to] = level_[u] + 1;
                    queue.push(e.to);
                }
        }
        return level_[sink] >= 0;
    }

    std::int64_t augment(int u, int sink, std::int64_t limit) {
        if (u == sink) return limit;
        for (auto& i = next_[u]; i < static_cast<int>(graph_[u].size()); ++i) {
            Arc& e = graph_[u][i];
            if (e.capacity <= 0 || level_[e.to] != level_[u] + 1) continue;
            if (const std::int64_t pushed = augment(e.to, sink, std::min(limit, e.capacity))) {
                e.capacity -= pushed;
                graph_[e.to][e.reverse].capacity += pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<std::vector<Arc>> graph_;
    std::vector<int> level_;
    std::vector<int> next_;
};

}  // namespace sepminor::detail
