#include "sepminor/treewidth.hpp"

#include "bitgraph.hpp"
#include "sepminor/intmath.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace sepminor {

using detail::BitGraph;
using detail::Mask;

std::string to_string(TreewidthMethod method) {
    switch (method) {
        case TreewidthMethod::ExactDp: return "exact-dp";
        case TreewidthMethod::MinFillUpper: return "minfill-upper";
        case TreewidthMethod::SeparatorDerivedUpper: return "separator-derived-upper";
    }
    return "exact-dp";
}

TreewidthResult treewidth_exact(const Graph& g, int budget) {
    const int n = g.vertex_count();
    if (n > budget || n > 30)
        throw BudgetExceeded("exact treewidth limited to " + std::to_string(std::min(budget, 30)) + " vertices");
    TreewidthResult result;
    result.method = TreewidthMethod::ExactDp;
    if (n == 0) return result;
    const BitGraph bg(g);
    const std::size_t total = std::size_t{1} << n;
    // best[S]: minimum over orders eliminating S first of the largest
    // later-neighbourhood seen so far (-1 for the empty set)
    std::vector<std::int8_t> best(total, 0);
    std::vector<std::int8_t> last(total, 0);
    best[0] = -1;
    for (std::size_t s = 1; s < total; ++s) {
        int value = 127;
        int choice = -1;
        for (Mask rest = s; rest != 0; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const Mask before = s & ~detail::bit(v);
            int candidate = best[before];
            if (candidate >= value) continue;
            // vertices outside before+v reachable from v through `before`
            Mask reach = bg.adj[v] & before;
            Mask frontier = reach;
            while (frontier != 0) {
                const Mask next = bg.neighborhood(frontier) & before & ~reach;
                reach |= next;
                frontier = next;
            }
            const Mask q = (bg.adj[v] | bg.neighborhood(reach)) & ~before & ~detail::bit(v);
            candidate = std::max(candidate, std::popcount(q));
            if (candidate < value) {
                value = candidate;
                choice = v;
            }
        }
        best[s] = static_cast<std::int8_t>(value);
        last[s] = static_cast<std::int8_t>(choice);
    }
    result.value = best[total - 1];
    std::vector<Vertex> reversed;
    for (Mask s = total - 1; s != 0; s &= ~detail::bit(last[s])) reversed.push_back(last[s]);
    result.elimination_order.assign(reversed.rbegin(), reversed.rend());
    return result;
}

namespace {

std::vector<std::set<Vertex>> adjacency_sets(const Graph& g) {
    std::vector<std::set<Vertex>> adj(static_cast<std::size_t>(g.vertex_count()));
    for (auto [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    return adj;
}

}  // namespace

TreewidthResult treewidth_minfill(const Graph& g) {
    const int n = g.vertex_count();
    auto adj = adjacency_sets(g);
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    TreewidthResult result;
    result.method = TreewidthMethod::MinFillUpper;
    int width = n == 0 ? -1 : 0;
    for (int step = 0; step < n; ++step) {
        Vertex pick = -1;
        std::int64_t pick_fill = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (gone[v]) continue;
            std::int64_t fill = 0;
            for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
                for (auto b = std::next(a); b != adj[v].end(); ++b)
                    if (!adj[*a].contains(*b)) ++fill;
            if (pick < 0 || fill < pick_fill ||
                (fill == pick_fill && adj[v].size() < adj[pick].size())) {
                pick = v;
                pick_fill = fill;
            }
        }
        width = std::max(width, static_cast<int>(adj[pick].size()));
        for (auto a = adj[pick].begin(); a != adj[pick].end(); ++a)
            for (auto b = std::next(a); b != adj[pick].end(); ++b) {
                adj[*a].insert(*b);
                adj[*b].insert(*a);
            }
        for (Vertex w : adj[pick]) adj[w].erase(pick);
        adj[pick].clear();
        gone[pick] = 1;
        result.elimination_order.push_back(pick);
    }
    result.value = width;
    return result;
}

std::vector<std::vector<Vertex>> elimination_bags(const Graph& g, std::span<const Vertex> order) {
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n) throw std::invalid_argument("elimination order must list every vertex");
    std::vector<int> position(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (!g.contains(order[i]) || position[order[i]] != -1)
            throw std::invalid_argument("elimination order is not a permutation");
        position[order[i]] = static_cast<int>(i);
    }
    auto adj = adjacency_sets(g);
    std::vector<std::vector<Vertex>> bags;
    for (Vertex v : order) {
        std::vector<Vertex> bag{v};
        for (Vertex w : adj[v])
            if (position[w] > position[v]) bag.push_back(w);
        for (std::size_t a = 1; a < bag.size(); ++a)
            for (std::size_t b = a + 1; b < bag.size(); ++b) {
                adj[bag[a]].insert(bag[b]);
                adj[bag[b]].insert(bag[a]);
            }
        std::sort(bag.begin(), bag.end());
        bags.push_back(std::move(bag));
    }
    return bags;
}

int elimination_width(const Graph& g, std::span<const Vertex> order) {
    int width = g.vertex_count() == 0 ? -1 : 0;
    for (const auto& bag : elimination_bags(g, order)) width = std::max(width, static_cast<int>(bag.size()) - 1);
    return width;
}

int tw_upper_from_separators(int k) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    return 15 * k;
}

int max_induced_separator_number(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kInducedSeparatorBudget)
        throw BudgetExceeded("induced-subgraph separator number limited to " + std::to_string(kInducedSeparatorBudget) +
                             " vertices; refusing to approximate");
    const BitGraph bg(g);
    int k = 0;
    for (Mask s = 1; s <= detail::low_mask(n) && n > 0; ++s)
        k = std::max(k, std::popcount(bg.min_balanced_separator(s)));
    return k;
}

SeparatorCertificate separator_from_treewidth(const Graph& g, int c) {
    const int n = g.vertex_count();
    const TreewidthResult decomposition = n <= kTreewidthExactBudget ? treewidth_exact(g) : treewidth_minfill(g);
    if (decomposition.value > c)
        throw std::invalid_argument("no tree decomposition of width <= " + std::to_string(c) + " available (best " +
                                    std::to_string(decomposition.value) + ")");
    std::optional<std::vector<Vertex>> chosen;
    for (const auto& bag : elimination_bags(g, decomposition.elimination_order)) {
        if (chosen && bag.size() >= chosen->size()) continue;
        if (is_balanced_separator(g, VertexSet(n, bag))) chosen = bag;
    }
    if (!chosen) {
        if (is_balanced_separator(g, VertexSet(n))) return certify_separator(g, VertexSet(n));
        throw std::logic_error("separator_from_treewidth: no balanced bag");
    }
    return certify_separator(g, VertexSet(n, *chosen));
}

std::int64_t subdivision_inverse(std::int64_t y, const Rational& eps) {
    if (!(Rational(0) < eps && eps < Rational(1))) throw std::invalid_argument("eps must lie in (0,1)");
    const Rational x = eps / (Rational(1) - eps);
    auto grows = [&](std::int64_t v) -> unsigned __int128 {
        try {
            const auto t = intmath::ceil_power(static_cast<std::uint64_t>(v), x);
            return static_cast<unsigned __int128>(v) * t;
        } catch (const std::overflow_error&) {
            return ~static_cast<unsigned __int128>(0);
        }
    };
    if (y < 1 || grows(1) > static_cast<unsigned __int128>(y)) return 1;
    std::int64_t lo = 1;
    std::int64_t hi = y;
    while (lo < hi) {
        const std::int64_t mid = lo + (hi - lo + 1) / 2;
        if (grows(mid) <= static_cast<unsigned __int128>(y))
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

double subdivided_separator_bound(std::int64_t vertices, const Rational& eps, const SeparatorProfile& f) {
    if (vertices < 1) throw std::invalid_argument("vertex count must be >= 1");
    const auto p = static_cast<double>(subdivision_inverse(2 * vertices, eps));
    return 15.0 * f.coefficient * std::pow(p, f.power) + 1.0;
}

}  // namespace sepminor
