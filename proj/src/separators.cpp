#include "sepminor/separators.hpp"

#include "bitgraph.hpp"
#include "sepminor/generators.hpp"
#include "sepminor/intmath.hpp"
#include "sepminor/random.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <queue>

namespace sepminor {

namespace {

using detail::BitGraph;
using detail::Mask;

std::vector<std::vector<Vertex>> bfs_layers(const Graph& g, Vertex root, const VertexSet& allowed) {
    std::vector<std::vector<Vertex>> layers;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    seen[root] = 1;
    layers.push_back({root});
    while (true) {
        std::vector<Vertex> next;
        for (Vertex u : layers.back())
            for (Vertex w : g.neighbors(u))
                if (!seen[w] && allowed.contains(w)) {
                    seen[w] = 1;
                    next.push_back(w);
                }
        if (next.empty()) break;
        std::sort(next.begin(), next.end());
        layers.push_back(std::move(next));
    }
    return layers;
}

Vertex farthest_from(const Graph& g, Vertex root, const VertexSet& allowed) {
    const auto dist = bfs_distances(g, root, allowed);
    Vertex best = root;
    for (Vertex v : allowed.members())
        if (dist[v] > dist[best]) best = v;
    return best;
}

VertexSet set_union(const VertexSet& a, std::span<const Vertex> more) {
    VertexSet out = a;
    for (Vertex v : more) out.insert(v);
    return out;
}

SeparatorCertificate bfs_layer_separator(const Graph& g) {
    const int n = g.vertex_count();
    const auto dec = components(g);
    if (dec.largest_size() <= balance_threshold(n)) return certify_separator(g, VertexSet(n));
    const auto big = dec.members(dec.largest());
    const VertexSet allowed(n, big);
    std::vector<Vertex> roots{big.front()};
    roots.push_back(farthest_from(g, roots[0], allowed));
    roots.push_back(farthest_from(g, roots[1], allowed));

    std::optional<std::vector<Vertex>> best;
    for (Vertex root : roots) {
        for (const auto& layer : bfs_layers(g, root, allowed)) {
            if (best && layer.size() >= best->size()) continue;
            if (is_balanced_separator(g, VertexSet(n, layer))) best = layer;
        }
    }
    if (!best) throw std::logic_error("bfs-layer separator: no balanced layer found");
    return certify_separator(g, prune_separator(g, VertexSet(n, *best)));
}

SeparatorCertificate recursive_bisection_separator(const Graph& g) {
    const int n = g.vertex_count();
    VertexSet x(n);
    while (true) {
        const auto dec = components(g, x);
        if (dec.largest_size() <= balance_threshold(n)) break;
        const auto piece = dec.members(dec.largest());
        const VertexSet allowed(n, piece);
        const Vertex root = farthest_from(g, farthest_from(g, piece.front(), allowed), allowed);
        const auto layers = bfs_layers(g, root, allowed);
        const auto total = static_cast<std::int64_t>(piece.size());
        std::int64_t before = 0;
        int chosen = -1;
        for (std::size_t i = 0; i < layers.size(); ++i) {
            const auto size = static_cast<std::int64_t>(layers[i].size());
            const std::int64_t after = total - before - size;
            if (3 * before <= 2 * total && 3 * after <= 2 * total &&
                (chosen < 0 || layers[i].size() < layers[chosen].size()))
                chosen = static_cast<int>(i);
            before += size;
        }
        if (chosen < 0) throw std::logic_error("recursive bisection: no splitting layer");
        x = set_union(x, layers[chosen]);
    }
    return certify_separator(g, prune_separator(g, std::move(x)));
}

}  // namespace

bool is_balanced_separator(const Graph& g, const VertexSet& x) {
    return components(g, x).largest_size() <= balance_threshold(g.vertex_count());
}

SeparatorCertificate certify_separator(const Graph& g, VertexSet x) {
    const auto dec = components(g, x);
    if (dec.largest_size() > balance_threshold(g.vertex_count()))
        throw std::logic_error("certify_separator: set is not a balanced separator");
    return SeparatorCertificate{std::move(x), dec.largest_size(), g.vertex_count()};
}

bool revalidate(const Graph& g, const SeparatorCertificate& cert) {
    if (cert.n != g.vertex_count() || cert.separator.universe() != g.vertex_count()) return false;
    const auto dec = components(g, cert.separator);
    return dec.largest_size() == cert.largest_component && cert.largest_component <= balance_threshold(cert.n);
}

VertexSet prune_separator(const Graph& g, VertexSet x) {
    const std::vector<Vertex> members(x.members().begin(), x.members().end());
    for (Vertex v : members) {
        x.erase(v);
        if (!is_balanced_separator(g, x)) x.insert(v);
    }
    return x;
}

SeparatorCertificate min_balanced_separator_exact(const Graph& g, int budget) {
    const int n = g.vertex_count();
    if (n > budget || n > 63)
        throw BudgetExceeded("exact separator search limited to " + std::to_string(std::min(budget, 63)) +
                             " vertices, graph has " + std::to_string(n));
    const BitGraph bg(g);
    const Mask best = bg.min_balanced_separator(detail::low_mask(n));
    std::vector<Vertex> members;
    for (Mask s = best; s != 0; s &= s - 1) members.push_back(std::countr_zero(s));
    return certify_separator(g, VertexSet(n, members));
}

SeparatorCertificate separator_heuristic(const Graph& g, SeparatorStrategy strategy) {
    return strategy == SeparatorStrategy::BfsLayer ? bfs_layer_separator(g) : recursive_bisection_separator(g);
}

double PrsOutcome::separator_bound() const {
    return static_cast<double>(n) / l + 2.0 * h * h * l * std::log2(static_cast<double>(n));
}

PrsOutcome prs_separator_or_minor(const Graph& g, int l, int h) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("prs_separator_or_minor needs n >= 2");
    if (l < 1 || h < 1) throw std::invalid_argument("prs_separator_or_minor needs l, h >= 1");
    PrsOutcome out;
    out.n = n;
    out.l = l;
    out.h = h;
    out.depth = intmath::floor_two_l_log2(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(l));
    const int depth = out.depth;

    struct Cluster {
        std::vector<Vertex> vertices;
        Vertex center = 0;
        bool alive = true;
    };
    std::vector<Cluster> clusters;
    // contacts[{earlier, later}] = host edge (in earlier, in later)
    std::map<std::pair<int, int>, Edge> contacts;
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    VertexSet x(n);

    auto cluster_vertices = [&] {
        VertexSet a = x;
        for (const auto& c : clusters)
            if (c.alive)
                for (Vertex v : c.vertices) a.insert(v);
        return a;
    };
    auto alive_ids = [&] {
        std::vector<int> ids;
        for (int i = 0; i < static_cast<int>(clusters.size()); ++i)
            if (clusters[i].alive) ids.push_back(i);
        return ids;
    };
    auto kill = [&](int i) {
        clusters[i].alive = false;
        for (Vertex v : clusters[i].vertices) owner[v] = -1;
    };

    const long long iteration_cap = 4LL * n * (h + 1) + 16;
    for (long long iteration = 0;; ++iteration) {
        const VertexSet removed = cluster_vertices();
        const auto dec = components(g, removed);
        if (dec.largest_size() <= balance_threshold(n)) {
            auto cert = certify_separator(g, prune_separator(g, removed));
            out.result = std::move(cert);
            break;
        }
        if (iteration > iteration_cap) {
            // Give up on the current minor model; its vertices join the separator.
            x = removed;
            for (int i : alive_ids()) kill(i);
            continue;
        }
        const VertexSet piece(n, dec.members(dec.largest()));

        for (int i : alive_ids()) {
            bool adjacent = false;
            for (Vertex v : clusters[i].vertices) {
                for (Vertex w : g.neighbors(v))
                    if (piece.contains(w)) {
                        adjacent = true;
                        break;
                    }
                if (adjacent) break;
            }
            if (!adjacent) kill(i);
        }
        const auto alive = alive_ids();

        // Layered BFS inside the piece from its smallest vertex.
        const Vertex root = piece.members().front();
        std::vector<int> parent(static_cast<std::size_t>(n), -2);
        std::vector<std::vector<Vertex>> layers{{root}};
        parent[root] = -1;
        std::map<int, Edge> touch;  // cluster -> (ball vertex, cluster vertex)
        bool grown = false;
        for (int j = 0;; ++j) {
            for (Vertex u : layers[j])
                for (Vertex w : g.neighbors(u))
                    if (owner[w] >= 0 && clusters[owner[w]].alive && !touch.contains(owner[w]))
                        touch.emplace(owner[w], Edge{u, w});
            if (touch.size() == alive.size()) {
                Cluster fresh;
                fresh.center = root;
                VertexSet tree(n);
                tree.insert(root);
                for (const auto& [id, e] : touch)
                    for (Vertex v = e.first; v != root; v = parent[v]) tree.insert(v);
                fresh.vertices.assign(tree.members().begin(), tree.members().end());
                const int fresh_id = static_cast<int>(clusters.size());
                for (const auto& [id, e] : touch) contacts[{id, fresh_id}] = Edge{e.second, e.first};
                for (Vertex v : fresh.vertices) owner[v] = fresh_id;
                clusters.push_back(std::move(fresh));
                grown = true;
                break;
            }
            if (j == depth) {
                int cut = 1;
                for (int i = 2; i <= depth; ++i)
                    if (layers[i].size() < layers[cut].size()) cut = i;
                for (Vertex v : layers[cut]) x.insert(v);
                break;
            }
            std::vector<Vertex> next;
            for (Vertex u : layers[j])
                for (Vertex w : g.neighbors(u))
                    if (parent[w] == -2 && piece.contains(w) && owner[w] < 0) {
                        parent[w] = u;
                        next.push_back(w);
                    }
            if (next.empty())
                throw std::logic_error("prs: exhausted a component without reaching an adjacent cluster");
            std::sort(next.begin(), next.end());
            layers.push_back(std::move(next));
        }
        if (!grown) continue;

        const auto members = alive_ids();
        if (static_cast<int>(members.size()) < h) continue;
        MinorWitness w;
        w.depth = depth;
        w.target = complete(h);
        for (int id : members) {
            w.branch_sets.push_back(clusters[id].vertices);
            w.centers.push_back(clusters[id].center);
        }
        for (auto [a, b] : w.target.edges()) w.cross_edges.push_back(contacts.at({members[a], members[b]}));
        out.result = std::move(w);
        break;
    }
    if (!verify_prs_outcome(g, out)) throw std::logic_error("prs_separator_or_minor produced an unverifiable outcome");
    return out;
}

bool verify_prs_outcome(const Graph& g, const PrsOutcome& outcome) {
    if (outcome.n != g.vertex_count() || outcome.l < 1 || outcome.h < 1 || outcome.n < 2) return false;
    const int depth = intmath::floor_two_l_log2(static_cast<std::uint64_t>(outcome.n),
                                                static_cast<std::uint64_t>(outcome.l));
    if (outcome.depth != depth) return false;
    if (outcome.is_separator()) {
        const auto& cert = outcome.separator();
        return revalidate(g, cert) &&
               intmath::within_prs_bound(static_cast<std::uint64_t>(cert.size()), static_cast<std::uint64_t>(outcome.n),
                                         static_cast<std::uint64_t>(outcome.l), static_cast<std::uint64_t>(outcome.h));
    }
    const auto& w = outcome.minor();
    return w.depth == depth && w.target == complete(outcome.h) && verify_minor_witness(g, w).ok;
}

PrsParameters prs_parameters(std::int64_t r, const Rational& eps) {
    if (!(Rational(0) < eps && eps <= Rational(1))) throw std::invalid_argument("eps must lie in (0,1]");
    if (r < 2) throw std::invalid_argument("r must be at least 2");
    using ld = long double;
    const ld e = static_cast<ld>(eps.num()) / static_cast<ld>(eps.den());
    const ld lr = std::log2(static_cast<ld>(r));
    PrsParameters p;
    p.n = static_cast<std::int64_t>(std::floor(std::pow(static_cast<ld>(r), 1 / e) * std::pow(lr, -2 / e)));
    if (p.n < 2) throw std::invalid_argument("r=" + std::to_string(r) + " below feasibility threshold (n < 2)");
    const ld ln = std::log2(static_cast<ld>(p.n));
    p.l = static_cast<std::int64_t>(std::floor(static_cast<ld>(r) / (2 * ln)));
    if (p.l < 1) throw std::invalid_argument("r=" + std::to_string(r) + " below feasibility threshold (l < 1)");
    p.h = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<ld>(p.n)) / (2 * static_cast<ld>(p.l) * ln)));
    p.feasible = p.h >= 1;
    const ld nn = static_cast<ld>(p.n);
    const ld ll = static_cast<ld>(p.l);
    const ld hh = static_cast<ld>(p.h);
    p.separator_term_dominates = 2 * hh * hh * ll * ln < nn / ll;
    p.n_eps_below_r = std::pow(nn, e) <= static_cast<ld>(r) / (lr * lr) && static_cast<ld>(r) / (lr * lr) <= r;
    p.log_n_bounded = ln <= lr / e;
    p.depth_sandwich = 2 * ll * ln <= static_cast<ld>(r) && static_cast<ld>(r) <= 3 * ll * ln;
    return p;
}

ExpanderCheck is_alpha_expander_exact(const Graph& g, const Rational& alpha, int budget) {
    const int n = g.vertex_count();
    if (n > budget || n > 63)
        throw BudgetExceeded("exact expansion check limited to " + std::to_string(std::min(budget, 63)) + " vertices");
    if (alpha < Rational(0)) throw std::invalid_argument("alpha must be non-negative");
    const BitGraph bg(g);
    const Mask all = detail::low_mask(n);
    for (int k = 1; k <= n / 2; ++k) {
        for (Mask s = detail::low_mask(k); s <= all && s != 0; s = detail::next_same_popcount(s)) {
            const int boundary = std::popcount(bg.neighborhood(s) & ~s);
            if (static_cast<__int128>(boundary) * alpha.den() < static_cast<__int128>(alpha.num()) * k) {
                std::vector<Vertex> members;
                for (Mask t = s; t != 0; t &= t - 1) members.push_back(std::countr_zero(t));
                return ExpanderCheck{false, VertexSet(n, members)};
            }
            if (s == all) break;
        }
    }
    return {};
}

std::optional<Rational> expansion_upper_estimate(const Graph& g, int samples, std::uint64_t seed) {
    const int n = g.vertex_count();
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    if (n < 2) return std::nullopt;
    const int half = n / 2;
    Rng rng(seed);
    std::optional<Rational> best;
    std::vector<char> in_set(static_cast<std::size_t>(n));
    std::vector<int> touching(static_cast<std::size_t>(n));  // neighbours inside S
    for (int sample = 0; sample < samples; ++sample) {
        std::fill(in_set.begin(), in_set.end(), 0);
        std::fill(touching.begin(), touching.end(), 0);
        const auto start = static_cast<Vertex>(rng.index(static_cast<std::uint64_t>(n)));
        const bool ball = sample % 2 == 0;
        std::vector<Vertex> frontier{start};  // candidates adjacent to S (or the start)
        std::deque<Vertex> queue{start};
        std::vector<char> queued(static_cast<std::size_t>(n), 0);
        queued[start] = 1;
        int size = 0;
        int boundary = 0;
        while (size < half) {
            Vertex next = -1;
            if (ball) {
                if (queue.empty()) break;
                next = queue.front();
                queue.pop_front();
            } else {
                while (!frontier.empty()) {
                    const auto pick = rng.index(frontier.size());
                    const Vertex cand = frontier[pick];
                    frontier[pick] = frontier.back();
                    frontier.pop_back();
                    if (!in_set[cand]) {
                        next = cand;
                        break;
                    }
                }
                if (next < 0) break;
            }
            if (touching[next] > 0) --boundary;
            in_set[next] = 1;
            ++size;
            for (Vertex w : g.neighbors(next)) {
                if (in_set[w]) continue;
                if (touching[w]++ == 0) ++boundary;
                if (ball) {
                    if (!queued[w]) {
                        queued[w] = 1;
                        queue.push_back(w);
                    }
                } else {
                    frontier.push_back(w);
                }
            }
            const Rational ratio(boundary, size);
            if (!best || ratio < *best) best = ratio;
        }
    }
    return best;
}

}  // namespace sepminor
