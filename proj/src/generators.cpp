#include "sepminor/generators.hpp"

#include "sepminor/intmath.hpp"
#include "sepminor/random.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace sepminor {

Vertex king_grid_id(int n, std::span<const int> coords) {
    std::int64_t id = 0;
    for (int c : coords) id = id * n + c;
    return static_cast<Vertex>(id);
}

std::vector<int> king_grid_coords(int n, int d, Vertex id) {
    std::vector<int> coords(static_cast<std::size_t>(d));
    for (int j = d - 1; j >= 0; --j) {
        coords[j] = id % n;
        id /= n;
    }
    return coords;
}

Graph king_grid(int n, int d, std::int64_t budget) {
    if (n < 1 || d < 1) throw GeneratorError("king_grid needs n >= 1 and d >= 1");
    std::int64_t total = 1;
    for (int j = 0; j < d; ++j) {
        total *= n;
        if (total > budget)
            throw GeneratorError("king_grid(" + std::to_string(n) + "," + std::to_string(d) + ") exceeds size budget " +
                                 std::to_string(budget));
    }
    std::vector<Edge> edges;
    std::vector<int> offset(static_cast<std::size_t>(d));
    std::vector<int> other(static_cast<std::size_t>(d));
    for (Vertex v = 0; v < total; ++v) {
        const auto coords = king_grid_coords(n, d, v);
        std::fill(offset.begin(), offset.end(), -2);
        while (true) {
            bool inside = true;
            for (int j = 0; j < d && inside; ++j) {
                other[j] = coords[j] + offset[j];
                inside = other[j] >= 0 && other[j] < n;
            }
            if (inside) {
                const Vertex w = king_grid_id(n, other);
                if (w > v) edges.emplace_back(v, w);
            }
            int j = d - 1;
            while (j >= 0 && offset[j] == 2) offset[j--] = -2;
            if (j < 0) break;
            ++offset[j];
        }
    }
    return Graph::build(static_cast<int>(total), edges);
}

Subdivision subdivide_uniform(const Graph& g, int per_edge) {
    if (per_edge < 0) throw GeneratorError("subdivision count must be non-negative");
    const int m = g.vertex_count();
    const std::int64_t total = m + static_cast<std::int64_t>(per_edge) * g.edge_count();
    if (total > std::numeric_limits<int>::max() / 2) throw GeneratorError("subdivided graph too large");
    Subdivision sub;
    sub.base_vertices = m;
    sub.per_edge = per_edge;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.edge_count()) * (per_edge + 1));
    Vertex next = m;
    for (auto [u, v] : g.edges()) {
        std::vector<Vertex> p{u};
        for (int j = 0; j < per_edge; ++j) p.push_back(next++);
        p.push_back(v);
        for (std::size_t j = 0; j + 1 < p.size(); ++j) edges.emplace_back(p[j], p[j + 1]);
        sub.paths.push_back(std::move(p));
    }
    sub.graph = Graph::build(static_cast<int>(total), edges);
    return sub;
}

int eps_subdivision_count(int m, const Rational& eps) {
    if (!(Rational(0) < eps && eps < Rational(1))) throw GeneratorError("eps must lie in (0,1), got " + eps.str());
    if (m < 1) throw GeneratorError("base graph must be nonempty");
    const auto k = intmath::ceil_power(static_cast<std::uint64_t>(m), eps / (Rational(1) - eps));
    if (k > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) throw GeneratorError("subdivision count overflow");
    return static_cast<int>(k);
}

int sgr_subdivision_count(int m, const Rational& eps) {
    if (!(Rational(1, 2) <= eps && eps < Rational(1)))
        throw GeneratorError("eps must lie in [1/2,1), got " + eps.str());
    if (m < 1) throw GeneratorError("base graph must be nonempty");
    const Rational x = (Rational(2) * eps - Rational(1)) / (Rational(2) - Rational(2) * eps);
    const auto k = intmath::ceil_power(static_cast<std::uint64_t>(m), x);
    if (k > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) throw GeneratorError("subdivision count overflow");
    return static_cast<int>(k);
}

Subdivision subdivide_eps(const Graph& g, const Rational& eps) {
    return subdivide_uniform(g, eps_subdivision_count(g.vertex_count(), eps));
}

Subdivision subdivide_sgr(const Graph& g, const Rational& eps) {
    return subdivide_uniform(g, sgr_subdivision_count(g.vertex_count(), eps));
}

Graph planar_grid(int t) {
    if (t < 1) throw GeneratorError("planar_grid needs t >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            if (j + 1 < t) edges.emplace_back(i * t + j, i * t + j + 1);
            if (i + 1 < t) edges.emplace_back(i * t + j, (i + 1) * t + j);
        }
    return Graph::build(t * t, edges);
}

Graph complete(int m) {
    if (m < 1) throw GeneratorError("complete needs m >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) edges.emplace_back(u, v);
    return Graph::build(m, edges);
}

Graph path(int n) {
    if (n < 1) throw GeneratorError("path needs n >= 1");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::build(n, edges);
}

Graph cycle(int n) {
    if (n < 3) throw GeneratorError("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::build(n, edges);
}

Graph star(int leaves) {
    if (leaves < 0) throw GeneratorError("star needs leaves >= 0");
    std::vector<Edge> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph::build(leaves + 1, edges);
}

Graph random_regular(int n, int deg, std::uint64_t seed, int retries) {
    if (n < 1 || deg < 0) throw GeneratorError("random_regular needs n >= 1, deg >= 0");
    if ((static_cast<std::int64_t>(n) * deg) % 2 != 0)
        throw GeneratorError("random_regular: n*deg must be even (n=" + std::to_string(n) + ", deg=" +
                             std::to_string(deg) + ")");
    if (deg >= n) throw GeneratorError("random_regular: degree must be below n");
    Rng rng(seed);
    std::vector<Vertex> points;
    for (Vertex v = 0; v < n; ++v)
        for (int j = 0; j < deg; ++j) points.push_back(v);
    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (int attempt = 0; attempt < retries; ++attempt) {
        rng.shuffle(std::span<Vertex>(points));
        edges.clear();
        seen.clear();
        bool simple = true;
        for (std::size_t i = 0; i + 1 < points.size() && simple; i += 2) {
            const Vertex u = std::min(points[i], points[i + 1]);
            const Vertex v = std::max(points[i], points[i + 1]);
            simple = u != v && seen.emplace(u, v).second;
            edges.emplace_back(u, v);
        }
        if (simple) return Graph::build(n, edges);
    }
    throw GeneratorError("random_regular: no simple pairing after " + std::to_string(retries) + " attempts");
}

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw GeneratorError("random_tree needs n >= 1");
    if (n == 1) return Graph::build(1, {});
    if (n == 2) return Graph::build(2, {{0, 1}});
    Rng rng(seed);
    std::vector<int> code(static_cast<std::size_t>(n - 2));
    for (auto& c : code) c = static_cast<int>(rng.index(static_cast<std::uint64_t>(n)));
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (int c : code) ++count[c];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (count[v] == 0) leaves.insert(v);
    std::vector<Edge> edges;
    for (int c : code) {
        const int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, c);
        if (--count[c] == 0) leaves.insert(c);
    }
    edges.emplace_back(*leaves.begin(), *std::next(leaves.begin()));
    return Graph::build(n, edges);
}

Graph random_gnp(int n, std::uint64_t num, std::uint64_t den, std::uint64_t seed) {
    if (n < 0 || den == 0 || num > den) throw GeneratorError("random_gnp: bad parameters");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(num, den)) edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

namespace {

constexpr std::pair<FamilyKind, std::string_view> kKindNames[] = {
    {FamilyKind::KingGrid, "king-grid"},
    {FamilyKind::SubdividedCubic, "subdivided-cubic"},
    {FamilyKind::SubdividedClique, "subdivided-clique"},
    {FamilyKind::SubdividedPlanarGrid, "subdivided-planar-grid"},
    {FamilyKind::PlanarGrid, "planar-grid"},
    {FamilyKind::Complete, "complete"},
    {FamilyKind::Path, "path"},
    {FamilyKind::Cycle, "cycle"},
    {FamilyKind::RandomRegular, "random-regular"},
};

bool uses_eps(FamilyKind kind) {
    return kind == FamilyKind::SubdividedCubic || kind == FamilyKind::SubdividedClique ||
           kind == FamilyKind::SubdividedPlanarGrid;
}

}  // namespace

std::string to_string(FamilyKind kind) {
    for (auto [k, name] : kKindNames)
        if (k == kind) return std::string(name);
    return "unknown";
}

FamilyKind parse_family_kind(std::string_view name) {
    for (auto [k, n] : kKindNames)
        if (n == name) return k;
    throw GeneratorError("unknown family '" + std::string(name) + "'");
}

std::string FamilySpec::params() const {
    std::ostringstream out;
    out << "size=" << size;
    switch (kind) {
        case FamilyKind::KingGrid: out << ";d=" << d; break;
        case FamilyKind::SubdividedCubic: out << ";eps=" << eps.str() << ";seed=" << seed; break;
        case FamilyKind::SubdividedClique:
        case FamilyKind::SubdividedPlanarGrid: out << ";eps=" << eps.str(); break;
        case FamilyKind::RandomRegular: out << ";degree=" << degree << ";seed=" << seed; break;
        default: break;
    }
    return out.str();
}

void FamilySpec::validate() const {
    if (size < 1) throw GeneratorError("family size must be >= 1");
    if (kind == FamilyKind::KingGrid && d < 1) throw GeneratorError("king-grid needs d >= 1");
    if (uses_eps(kind) && !(Rational(0) < eps && eps <= Rational(1)))
        throw GeneratorError("eps must lie in (0,1], got " + eps.str());
}

GeneratedGraph generate(const FamilySpec& spec, std::int64_t budget) {
    spec.validate();
    GeneratedGraph out;
    out.spec = spec;
    out.base_vertices = spec.size;
    auto take_subdivision = [&](const Graph& base_graph, Subdivision sub, std::string base) {
        out.base = base_graph;
        out.graph = std::move(sub.graph);
        out.per_edge = sub.per_edge;
        out.base_vertices = sub.base_vertices;
        out.mapping = "base vertices of " + base + " keep ids 0.." + std::to_string(sub.base_vertices - 1) +
                      "; internal vertices of base edge i (sorted edge order, oriented from the smaller endpoint) are " +
                      std::to_string(sub.base_vertices) + "+i*" + std::to_string(sub.per_edge) + "+j";
    };
    switch (spec.kind) {
        case FamilyKind::KingGrid:
            out.graph = king_grid(spec.size, spec.d, budget);
            out.mapping = "id = row-major index of 0-based coordinates (x_1..x_d), last coordinate fastest";
            break;
        case FamilyKind::SubdividedCubic:
        {
            const Graph cubic = random_regular(spec.size, 3, spec.seed);
            take_subdivision(cubic, subdivide_eps(cubic, spec.eps), "random_regular(" + std::to_string(spec.size) + ",3)");
        }
            break;
        case FamilyKind::SubdividedClique:
            take_subdivision(complete(spec.size), subdivide_eps(complete(spec.size), spec.eps),
                             "K_" + std::to_string(spec.size));
            break;
        case FamilyKind::SubdividedPlanarGrid:
            take_subdivision(planar_grid(spec.size), subdivide_sgr(planar_grid(spec.size), spec.eps),
                             "planar_grid(" + std::to_string(spec.size) + ")");
            break;
        case FamilyKind::PlanarGrid:
            out.graph = planar_grid(spec.size);
            out.mapping = "id = row*t + col";
            break;
        case FamilyKind::Complete: out.graph = complete(spec.size); break;
        case FamilyKind::Path: out.graph = path(spec.size); break;
        case FamilyKind::Cycle: out.graph = cycle(spec.size); break;
        case FamilyKind::RandomRegular: out.graph = random_regular(spec.size, spec.degree, spec.seed); break;
    }
    if (out.mapping.empty()) out.mapping = "ids 0..n-1 in construction order";
    if (out.graph.vertex_count() > budget) throw GeneratorError("generated graph exceeds size budget");
    return out;
}

}  // namespace sepminor
