#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <functional>
#include <numeric>
#include <random>

namespace oracle {

Matrix adjacency_matrix(const Graph& g) {
    const int n = g.vertex_count();
    Matrix m(n, std::vector<bool>(n, false));
    for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = true;
    return m;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void join(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<int> component_sizes(const Graph& g, const std::vector<bool>& removed) {
    const int n = g.vertex_count();
    UnionFind uf(n);
    for (auto [u, v] : g.edges())
        if (!removed[u] && !removed[v]) uf.join(u, v);
    std::vector<int> count(n, 0);
    for (int v = 0; v < n; ++v)
        if (!removed[v]) ++count[uf.find(v)];
    std::vector<int> sizes;
    for (int c : count)
        if (c > 0) sizes.push_back(c);
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

int min_separator_size(const Graph& g) {
    const int n = g.vertex_count();
    int best = n;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const int k = std::popcount(mask);
        if (k >= best) continue;
        std::vector<bool> removed(n);
        for (int v = 0; v < n; ++v) removed[v] = (mask >> v) & 1u;
        const auto sizes = component_sizes(g, removed);
        if (sizes.empty() || sizes.front() * 3 <= 2 * n) best = k;
    }
    return best;
}

int treewidth_by_permutations(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return -1;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    int best = n;
    do {
        Matrix m = adjacency_matrix(g);
        std::vector<bool> done(n, false);
        int width = 0;
        for (int v : order) {
            std::vector<int> nb;
            for (int w = 0; w < n; ++w)
                if (!done[w] && m[v][w]) nb.push_back(w);
            width = std::max<int>(width, nb.size());
            for (int a : nb)
                for (int b : nb)
                    if (a != b) m[a][b] = true;
            done[v] = true;
        }
        best = std::min(best, width);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

Rational densest_density(const Graph& g) {
    const int n = g.vertex_count();
    Rational best(0);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int edges = 0;
        for (auto [u, v] : g.edges())
            if (((mask >> u) & 1u) && ((mask >> v) & 1u)) ++edges;
        best = sepminor::max(best, Rational(edges, std::popcount(mask)));
    }
    return best;
}

Rational min_expansion(const Graph& g) {
    const int n = g.vertex_count();
    const Matrix m = adjacency_matrix(g);
    std::optional<Rational> best;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const int k = std::popcount(mask);
        if (2 * k > n) continue;
        int boundary = 0;
        for (int w = 0; w < n; ++w) {
            if ((mask >> w) & 1u) continue;
            for (int v = 0; v < n; ++v)
                if (((mask >> v) & 1u) && m[v][w]) {
                    ++boundary;
                    break;
                }
        }
        const Rational r(boundary, k);
        if (!best || r < *best) best = r;
    }
    return best.value_or(Rational(0));
}

bool witness_valid(const Graph& host, const sepminor::MinorWitness& w) {
    const int n = host.vertex_count();
    const int t = w.target.vertex_count();
    if (static_cast<int>(w.branch_sets.size()) != t || static_cast<int>(w.centers.size()) != t) return false;
    if (w.cross_edges.size() != static_cast<std::size_t>(w.target.edge_count())) return false;
    std::vector<int> owner(n, -1);
    for (int i = 0; i < t; ++i) {
        if (w.branch_sets[i].empty()) return false;
        for (int v : w.branch_sets[i]) {
            if (v < 0 || v >= n || owner[v] != -1) return false;
            owner[v] = i;
        }
    }
    for (int i = 0; i < t; ++i) {
        const int c = w.centers[i];
        if (c < 0 || c >= n || owner[c] != i) return false;
        // Bellman-Ford style relaxation inside the set
        std::vector<int> dist(n, -1);
        dist[c] = 0;
        for (bool changed = true; changed;) {
            changed = false;
            for (auto [u, v] : host.edges()) {
                if (owner[u] != i || owner[v] != i) continue;
                if (dist[u] >= 0 && (dist[v] < 0 || dist[v] > dist[u] + 1)) dist[v] = dist[u] + 1, changed = true;
                if (dist[v] >= 0 && (dist[u] < 0 || dist[u] > dist[v] + 1)) dist[u] = dist[v] + 1, changed = true;
            }
        }
        for (int v : w.branch_sets[i])
            if (dist[v] < 0 || dist[v] > w.depth) return false;
    }
    const auto edges = w.target.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [a, b] = w.cross_edges[e];
        if (a < 0 || a >= n || b < 0 || b >= n || !host.has_edge(a, b)) return false;
        if (!((owner[a] == edges[e].first && owner[b] == edges[e].second) ||
              (owner[a] == edges[e].second && owner[b] == edges[e].first)))
            return false;
    }
    return true;
}

Graph random_connected(int n, double p, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<sepminor::Edge> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(static_cast<int>(rng() % static_cast<std::uint32_t>(v)), v);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const bool tree = std::find(edges.begin(), edges.end(), sepminor::Edge{u, v}) != edges.end();
            if (!tree && coin(rng) < p) edges.emplace_back(u, v);
        }
    return Graph::build(n, edges);
}

std::vector<Graph> all_connected_graphs(int n) {
    std::vector<sepminor::Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<sepminor::Edge> e;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1u) e.push_back(pairs[i]);
        std::vector<bool> none(n, false);
        const Graph g = Graph::build(n, e);
        if (component_sizes(g, none).size() == 1) out.push_back(g);
    }
    return out;
}

}  // namespace oracle
