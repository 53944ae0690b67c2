#include "sepminor/minors.hpp"

#include "bitgraph.hpp"
#include "maxflow.hpp"
#include "sepminor/intmath.hpp"
#include "sepminor/random.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace sepminor {

Graph contract_witness(const Graph& host, const MinorWitness& w) {
    if (const auto check = verify_minor_witness(host, w); !check)
        throw std::invalid_argument("contract_witness: invalid witness (" + check.violation + ": " + check.detail + ")");
    std::vector<int> owner(static_cast<std::size_t>(host.vertex_count()), -1);
    for (std::size_t tv = 0; tv < w.branch_sets.size(); ++tv)
        for (Vertex v : w.branch_sets[tv]) owner[v] = static_cast<int>(tv);
    std::vector<Edge> edges;
    for (auto [hu, hv] : w.cross_edges) edges.emplace_back(owner[hu], owner[hv]);
    return Graph::build(w.target.vertex_count(), edges);
}

Contraction contract_partition(const Graph& host, const std::vector<std::vector<Vertex>>& parts) {
    std::vector<int> owner(static_cast<std::size_t>(host.vertex_count()), -1);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (Vertex v : parts[i]) {
            if (!host.contains(v) || owner[v] != -1) throw std::invalid_argument("contract_partition: parts overlap");
            owner[v] = static_cast<int>(i);
        }
    std::map<Edge, Edge> first;
    for (auto [u, v] : host.edges()) {
        const int a = owner[u];
        const int b = owner[v];
        if (a < 0 || b < 0 || a == b) continue;
        const Edge key{std::min(a, b), std::max(a, b)};
        first.try_emplace(key, a < b ? Edge{u, v} : Edge{v, u});
    }
    Contraction out;
    std::vector<Edge> edges;
    for (const auto& [key, rep] : first) {
        edges.push_back(key);
        out.representative.push_back(rep);
    }
    out.graph = Graph::build(static_cast<int>(parts.size()), edges);
    return out;
}

namespace {

std::int64_t induced_edge_count(const Graph& g, const std::vector<Vertex>& vertices) {
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : vertices) in[v] = 1;
    std::int64_t count = 0;
    for (auto [u, v] : g.edges())
        if (in[u] && in[v]) ++count;
    return count;
}

}  // namespace

DenseSubgraph densest_subgraph(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return {};
    if (g.edge_count() == 0) return {{0}, Rational(0)};
    const auto m = static_cast<int>(g.edge_count());
    std::vector<Vertex> best(static_cast<std::size_t>(n));
    std::iota(best.begin(), best.end(), 0);
    Rational lambda = g.density();
    while (true) {
        const int source = 0;
        const int sink = 1;
        detail::MaxFlow flow(2 + m + n);
        const auto edges = g.edges();
        for (int i = 0; i < m; ++i) {
            flow.add_edge(source, 2 + i, lambda.den());
            flow.add_edge(2 + i, 2 + m + edges[i].first, detail::MaxFlow::kInfinite);
            flow.add_edge(2 + i, 2 + m + edges[i].second, detail::MaxFlow::kInfinite);
        }
        for (int v = 0; v < n; ++v) flow.add_edge(2 + m + v, sink, lambda.num());
        const std::int64_t cut = flow.run(source, sink);
        if (lambda.den() * static_cast<std::int64_t>(m) - cut <= 0) break;
        const auto side = flow.source_side(source);
        std::vector<Vertex> chosen;
        for (int v = 0; v < n; ++v)
            if (side[2 + m + v]) chosen.push_back(v);
        const Rational density(induced_edge_count(g, chosen), static_cast<std::int64_t>(chosen.size()));
        if (!(lambda < density)) throw std::logic_error("densest_subgraph: parametric step did not improve");
        lambda = density;
        best = std::move(chosen);
    }
    return {best, lambda};
}

DenseSubgraph densest_subgraph_exhaustive(const Graph& g, int budget) {
    const int n = g.vertex_count();
    if (n > budget || n > 30) throw std::invalid_argument("densest_subgraph_exhaustive: graph too large");
    if (n == 0) return {};
    const detail::BitGraph bg(g);
    const std::size_t total = std::size_t{1} << n;
    std::vector<std::uint16_t> edges_in(total, 0);
    Rational best_density(-1);
    std::size_t best_mask = 0;
    for (std::size_t mask = 1; mask < total; ++mask) {
        const int low = std::countr_zero(mask);
        const std::size_t rest = mask & (mask - 1);
        edges_in[mask] = static_cast<std::uint16_t>(edges_in[rest] + std::popcount(bg.adj[low] & rest));
        const Rational d(edges_in[mask], std::popcount(mask));
        if (best_density < d) {
            best_density = d;
            best_mask = mask;
        }
    }
    DenseSubgraph out;
    out.density = best_density;
    for (int v = 0; v < n; ++v)
        if (best_mask >> v & 1U) out.vertices.push_back(v);
    return out;
}

std::string to_string(UpperBoundSource source) {
    switch (source) {
        case UpperBoundSource::None: return "none";
        case UpperBoundSource::Degeneracy: return "degeneracy";
        case UpperBoundSource::GridDegree: return "grid-degree";
        case UpperBoundSource::CubicDegree: return "cubic-degree";
        case UpperBoundSource::Planarity: return "planarity";
    }
    return "none";
}

namespace {

// Balls of radius <= rho grown through unassigned vertices, centers taken in `order`.
std::pair<std::vector<std::vector<Vertex>>, std::vector<Vertex>> ball_partition(const Graph& g,
                                                                                 const std::vector<Vertex>& order,
                                                                                 int rho) {
    std::vector<int> assigned(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<std::vector<Vertex>> parts;
    std::vector<Vertex> centers;
    for (Vertex c : order) {
        if (assigned[c] >= 0) continue;
        const int id = static_cast<int>(parts.size());
        std::vector<Vertex> ball{c};
        assigned[c] = id;
        std::vector<Vertex> frontier{c};
        for (int step = 0; step < rho && !frontier.empty(); ++step) {
            std::vector<Vertex> next;
            for (Vertex u : frontier)
                for (Vertex w : g.neighbors(u))
                    if (assigned[w] < 0) {
                        assigned[w] = id;
                        next.push_back(w);
                    }
            ball.insert(ball.end(), next.begin(), next.end());
            frontier = std::move(next);
        }
        std::sort(ball.begin(), ball.end());
        parts.push_back(std::move(ball));
        centers.push_back(c);
    }
    return {std::move(parts), std::move(centers)};
}

}  // namespace

DensityReport nabla_lower_greedy(const Graph& g, int r, std::uint64_t seed, int restarts) {
    if (r < 0) throw std::invalid_argument("nabla_lower_greedy needs r >= 0");
    if (restarts < 1) throw std::invalid_argument("nabla_lower_greedy needs restarts >= 1");
    DensityReport report;
    report.depth = r;
    bool have = false;
    const int n = g.vertex_count();
    for (int rho = 0; rho <= r; ++rho) {
        for (int attempt = 0; attempt < (rho == 0 ? 1 : restarts); ++attempt) {
            std::vector<Vertex> order(static_cast<std::size_t>(n));
            std::iota(order.begin(), order.end(), 0);
            Rng rng(derive_seed(seed, static_cast<std::uint64_t>(rho) * 1024 + static_cast<std::uint64_t>(attempt)));
            if (rho > 0) rng.shuffle(std::span<Vertex>(order));
            auto [parts, centers] = ball_partition(g, order, rho);
            const auto contraction = contract_partition(g, parts);
            const auto dense = densest_subgraph(contraction.graph);
            if (have && !(report.lower < dense.density)) continue;
            have = true;
            report.lower = dense.density;
            MinorWitness w;
            w.depth = r;
            w.target = contraction.graph.induced(dense.vertices);
            for (Vertex part : dense.vertices) {
                w.branch_sets.push_back(parts[part]);
                w.centers.push_back(centers[part]);
            }
            const auto all_edges = contraction.graph.edges();
            for (auto [a, b] : w.target.edges()) {
                const Edge key{dense.vertices[a], dense.vertices[b]};
                const auto it = std::lower_bound(all_edges.begin(), all_edges.end(), key);
                w.cross_edges.push_back(contraction.representative[static_cast<std::size_t>(it - all_edges.begin())]);
            }
            report.witness = std::move(w);
        }
    }
    if (!have) report.witness.depth = r;
    return report;
}

MinorWitness slab_bipartite_witness(int d, int r, std::int64_t budget) {
    if (d < 2 || d % 2 != 0) throw std::invalid_argument("slab witness needs an even dimension d >= 2");
    if (r < 1) throw std::invalid_argument("slab witness needs r >= 1");
    const int side = 2 * r;
    const int half = d / 2;
    std::int64_t total = 1;
    for (int j = 0; j < d; ++j) {
        total *= side;
        if (total > budget) throw std::invalid_argument("slab witness host exceeds size budget");
    }
    const auto per_slab = static_cast<std::int64_t>(intmath::checked_pow(static_cast<std::uint64_t>(side), half));

    // Enumerate {0..side-1}^half in lexicographic order.
    auto tuple_of = [&](std::int64_t index) {
        std::vector<int> t(static_cast<std::size_t>(half));
        for (int j = half - 1; j >= 0; --j) {
            t[j] = static_cast<int>(index % side);
            index /= side;
        }
        return t;
    };
    std::vector<std::vector<int>> a_keys;  // x with 1-based x_1 odd, i.e. 0-based even
    std::vector<std::vector<int>> b_keys;
    for (std::int64_t i = 0; i < per_slab; ++i) {
        auto t = tuple_of(i);
        if (t[0] % 2 == 0) a_keys.push_back(t);
        b_keys.push_back(std::move(t));
    }
    const int a = static_cast<int>(a_keys.size());
    const int b = static_cast<int>(b_keys.size());

    MinorWitness w;
    w.depth = r;
    std::vector<Edge> target_edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) target_edges.emplace_back(i, a + j);
    w.target = Graph::build(a + b, target_edges);

    std::vector<int> coords(static_cast<std::size_t>(d));
    const int mid = r - 1;  // 0-based middle of 0..2r-1
    for (const auto& x : a_keys) {
        std::vector<Vertex> set;
        for (std::int64_t i = 0; i < per_slab; ++i) {
            const auto free = tuple_of(i);
            std::copy(x.begin(), x.end(), coords.begin());
            std::copy(free.begin(), free.end(), coords.begin() + half);
            set.push_back(king_grid_id(side, coords));
        }
        std::sort(set.begin(), set.end());
        std::copy(x.begin(), x.end(), coords.begin());
        std::fill(coords.begin() + half, coords.end(), mid);
        w.centers.push_back(king_grid_id(side, coords));
        w.branch_sets.push_back(std::move(set));
    }
    for (const auto& y : b_keys) {
        std::vector<Vertex> set;
        for (std::int64_t i = 0; i < per_slab; ++i) {
            const auto free = tuple_of(i);
            if (free[0] % 2 == 0) continue;  // first coordinate must be even 1-based
            std::copy(free.begin(), free.end(), coords.begin());
            std::copy(y.begin(), y.end(), coords.begin() + half);
            set.push_back(king_grid_id(side, coords));
        }
        std::sort(set.begin(), set.end());
        std::fill(coords.begin(), coords.begin() + half, mid);
        coords[0] = 2 * ((r - 1) / 2) + 1;
        std::copy(y.begin(), y.end(), coords.begin() + half);
        w.centers.push_back(king_grid_id(side, coords));
        w.branch_sets.push_back(std::move(set));
    }
    for (auto [i, j] : w.target.edges()) {
        const auto& x = a_keys[i];
        const auto& y = b_keys[j - a];
        std::copy(x.begin(), x.end(), coords.begin());
        std::copy(y.begin(), y.end(), coords.begin() + half);
        const Vertex from = king_grid_id(side, coords);
        coords[0] += 1;
        w.cross_edges.emplace_back(from, king_grid_id(side, coords));
    }
    return w;
}

int subdivided_clique_radius(int m, const Rational& eps) {
    if (m < 1) throw std::invalid_argument("subdivided clique needs m >= 1");
    if (m == 1) return 0;
    const int k = eps_subdivision_count(m, eps);
    return (k + 1) / 2;
}

MinorWitness clique_witness_in_subdivided_clique(int m, const Rational& eps, int r) {
    const int needed = subdivided_clique_radius(m, eps);
    if (r < needed)
        throw std::invalid_argument("clique witness infeasible: branch sets need radius " + std::to_string(needed) +
                                    " > r=" + std::to_string(r));
    const Subdivision sub = subdivide_eps(complete(m), eps);
    const int k = sub.per_edge;
    const int split = (k + 1) / 2;  // internal vertices kept by the lower endpoint
    MinorWitness w;
    w.depth = r;
    w.target = complete(m);
    w.branch_sets.resize(static_cast<std::size_t>(m));
    for (Vertex v = 0; v < m; ++v) {
        w.branch_sets[v].push_back(v);
        w.centers.push_back(v);
    }
    for (const auto& p : sub.paths) {
        const Vertex lo = p.front();
        const Vertex hi = p.back();
        for (int j = 1; j <= k; ++j) w.branch_sets[j <= split ? lo : hi].push_back(p[j]);
        w.cross_edges.emplace_back(p[split], p[split + 1]);
    }
    for (auto& set : w.branch_sets) std::sort(set.begin(), set.end());
    return w;
}

namespace {

struct RootedTree {
    std::vector<int> parent;
    std::vector<int> depth;

    [[nodiscard]] Vertex lca(Vertex a, Vertex b) const {
        while (depth[a] > depth[b]) a = parent[a];
        while (depth[b] > depth[a]) b = parent[b];
        while (a != b) {
            a = parent[a];
            b = parent[b];
        }
        return a;
    }

    /// Vertices from `from` to `to` along the tree.
    [[nodiscard]] std::vector<Vertex> path(Vertex from, Vertex to) const {
        const Vertex top = lca(from, to);
        std::vector<Vertex> up;
        for (Vertex v = from; v != top; v = parent[v]) up.push_back(v);
        up.push_back(top);
        std::vector<Vertex> down;
        for (Vertex v = to; v != top; v = parent[v]) down.push_back(v);
        up.insert(up.end(), down.rbegin(), down.rend());
        return up;
    }
};

RootedTree bfs_tree(const Graph& g, Vertex root, const VertexSet& within) {
    RootedTree t;
    t.parent.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    t.depth.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    std::queue<Vertex> queue;
    t.depth[root] = 0;
    queue.push(root);
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop();
        for (Vertex w : g.neighbors(u))
            if (t.depth[w] < 0 && within.contains(w)) {
                t.depth[w] = t.depth[u] + 1;
                t.parent[w] = u;
                queue.push(w);
            }
    }
    return t;
}

}  // namespace

SubdivisionEmbedding extract_subdivision(const Graph& host, const MinorWitness& w) {
    if (const auto check = verify_minor_witness(host, w); !check)
        throw std::invalid_argument("extract_subdivision: invalid witness (" + check.violation + ")");
    if (w.target.max_degree() > 3) throw std::invalid_argument("extract_subdivision: target is not subcubic");
    const int t = w.target.vertex_count();
    const auto target_edges = w.target.edges();

    // terminal[e][side]: host endpoint of cross edge e inside the branch set of that side
    std::vector<std::vector<std::size_t>> incident(static_cast<std::size_t>(t));
    for (std::size_t i = 0; i < target_edges.size(); ++i) {
        incident[target_edges[i].first].push_back(i);
        incident[target_edges[i].second].push_back(i);
    }
    auto terminal_of = [&](std::size_t edge, Vertex tv) {
        return target_edges[edge].first == tv ? w.cross_edges[edge].first : w.cross_edges[edge].second;
    };

    SubdivisionEmbedding emb;
    emb.branch_vertices.resize(static_cast<std::size_t>(t));
    std::vector<RootedTree> trees;
    trees.reserve(static_cast<std::size_t>(t));
    for (Vertex tv = 0; tv < t; ++tv) {
        const VertexSet set(host.vertex_count(), w.branch_sets[tv]);
        trees.push_back(bfs_tree(host, w.centers[tv], set));
        const auto& tree = trees.back();
        std::vector<Vertex> terms;
        for (std::size_t e : incident[tv]) terms.push_back(terminal_of(e, tv));
        Vertex hub = w.centers[tv];
        if (terms.size() == 1) {
            hub = terms[0];
        } else if (terms.size() == 2) {
            hub = tree.lca(terms[0], terms[1]);
        } else if (terms.size() == 3) {
            // median of three terminals: the deepest pairwise lowest common ancestor
            hub = tree.lca(terms[0], terms[1]);
            for (auto [i, j] : {std::pair{0, 2}, std::pair{1, 2}}) {
                const Vertex c = tree.lca(terms[i], terms[j]);
                if (tree.depth[c] > tree.depth[hub]) hub = c;
            }
        }
        emb.branch_vertices[tv] = hub;
    }
    for (std::size_t i = 0; i < target_edges.size(); ++i) {
        const auto [tu, tv] = target_edges[i];
        auto route = trees[tu].path(emb.branch_vertices[tu], w.cross_edges[i].first);
        const auto back = trees[tv].path(w.cross_edges[i].second, emb.branch_vertices[tv]);
        route.insert(route.end(), back.begin(), back.end());
        emb.subdivisions.push_back(static_cast<int>(route.size()) - 2);
        emb.paths.push_back(std::move(route));
    }
    VertexSet used(host.vertex_count());
    for (Vertex v : emb.branch_vertices) used.insert(v);
    std::vector<Edge> edges;
    for (const auto& p : emb.paths) {
        for (Vertex v : p) used.insert(v);
        for (std::size_t j = 0; j + 1 < p.size(); ++j) edges.emplace_back(std::min(p[j], p[j + 1]), std::max(p[j], p[j + 1]));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    emb.vertices.assign(used.members().begin(), used.members().end());
    emb.edges = std::move(edges);
    if (!verify_subdivision(host, w.target, emb, 4 * w.depth))
        throw std::logic_error("extract_subdivision produced an invalid embedding");
    return emb;
}

bool verify_subdivision(const Graph& host, const Graph& target, const SubdivisionEmbedding& emb, int max_subdivisions) {
    const int t = target.vertex_count();
    const auto target_edges = target.edges();
    if (static_cast<int>(emb.branch_vertices.size()) != t || emb.paths.size() != target_edges.size()) return false;
    std::vector<int> use(static_cast<std::size_t>(host.vertex_count()), 0);
    for (Vertex v : emb.branch_vertices) {
        if (!host.contains(v) || use[v] != 0) return false;
        use[v] = -1;
    }
    for (std::size_t i = 0; i < target_edges.size(); ++i) {
        const auto& p = emb.paths[i];
        if (p.size() < 2) return false;
        if (p.front() != emb.branch_vertices[target_edges[i].first] ||
            p.back() != emb.branch_vertices[target_edges[i].second])
            return false;
        if (static_cast<int>(p.size()) - 2 > max_subdivisions) return false;
        if (i < emb.subdivisions.size() && emb.subdivisions[i] != static_cast<int>(p.size()) - 2) return false;
        for (std::size_t j = 0; j + 1 < p.size(); ++j)
            if (!host.has_edge(p[j], p[j + 1])) return false;
        for (std::size_t j = 1; j + 1 < p.size(); ++j) {
            if (!host.contains(p[j]) || use[p[j]] != 0) return false;
            use[p[j]] = static_cast<int>(i) + 1;
        }
    }
    for (auto [u, v] : emb.edges)
        if (!host.has_edge(u, v)) return false;
    return true;
}

GridDegreeBound grid_minor_degree_bound(int d, int r) {
    if (d < 1 || r < 0) throw std::invalid_argument("grid_minor_degree_bound needs d >= 1, r >= 0");
    const auto base = static_cast<std::uint64_t>(60) * static_cast<std::uint64_t>(r) + 25;
    if (d % 2 == 0) return {intmath::checked_pow(base, static_cast<unsigned>(d / 2)), false};
    return {intmath::floor_power(base, Rational(d, 2)), true};
}

std::int64_t subdivided_cubic_degree_bound(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("subdivided_cubic_degree_bound needs m >= 1");
    return 2 + static_cast<std::int64_t>(intmath::isqrt(static_cast<std::uint64_t>(m)));
}

std::optional<Rational> nabla_upper_degenerate(int r, int per_edge) {
    if (4LL * r < per_edge) return Rational(2);
    return std::nullopt;
}

}  // namespace sepminor
