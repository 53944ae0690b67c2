#pragma once

// Word-parallel view of a graph with at most 64 vertices, used by the
// subset-exhaustive routines.

#include "sepminor/graph.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace sepminor::detail {

using Mask = std::uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }
inline Mask low_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

struct BitGraph {
    int n = 0;
    std::vector<Mask> adj;

    explicit BitGraph(const Graph& g) : n(g.vertex_count()), adj(static_cast<std::size_t>(g.vertex_count()), 0) {
        for (auto [u, v] : g.edges()) {
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
    }

    [[nodiscard]] Mask neighborhood(Mask set) const {
        Mask out = 0;
        for (Mask s = set; s != 0; s &= s - 1) out |= adj[std::countr_zero(s)];
        return out;
    }

    /// Component of `start` inside `alive` (start must be in alive).
    [[nodiscard]] Mask component(int start, Mask alive) const {
        Mask comp = bit(start);
        Mask frontier = comp;
        while (frontier != 0) {
            const Mask next = neighborhood(frontier) & alive & ~comp;
            comp |= next;
            frontier = next;
        }
        return comp;
    }

    /// True iff every component of G[alive] has at most `limit` vertices.
    [[nodiscard]] bool components_at_most(Mask alive, int limit) const {
        if (std::popcount(alive) <= limit) return true;
        Mask rest = alive;
        while (rest != 0) {
            const Mask comp = component(std::countr_zero(rest), rest);
            if (std::popcount(comp) > limit) return false;
            rest &= ~comp;
        }
        return true;
    }

    /// Minimum balanced separator of G[vertices] (threshold from |vertices|);
    /// returns the first minimum set in increasing-cardinality, ascending-mask order.
    [[nodiscard]] Mask min_balanced_separator(Mask vertices) const {
        const int size = std::popcount(vertices);
        const int limit = 2 * size / 3;
        std::vector<int> ids;
        for (Mask s = vertices; s != 0; s &= s - 1) ids.push_back(std::countr_zero(s));
        const int k_max = size;
        for (int k = 0; k <= k_max; ++k) {
            if (size - k <= limit) return expand(ids, low_mask(k));
            // Gosper's hack over k-subsets of positions in `ids`
            Mask pos = low_mask(k);
            const Mask end = Mask{1} << size;
            while (pos < end) {
                const Mask chosen = expand(ids, pos);
                if (components_at_most(vertices & ~chosen, limit)) return chosen;
                if (k == 0) break;
                const Mask c = pos & (~pos + 1);
                const Mask r = pos + c;
                pos = (((r ^ pos) >> 2) / c) | r;
            }
        }
        return vertices;
    }

    static Mask expand(const std::vector<int>& ids, Mask positions) {
        Mask out = 0;
        for (Mask s = positions; s != 0; s &= s - 1) out |= bit(ids[std::countr_zero(s)]);
        return out;
    }
};

/// Next mask with the same popcount (Gosper); caller bounds the range.
inline Mask next_same_popcount(Mask x) {
    const Mask c = x & (~x + 1);
    const Mask r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

}  // namespace sepminor::detail
