#include "sepminor/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <queue>
#include <sstream>

namespace sepminor {

Graph Graph::build(int n, std::span<const Edge> edges) {
    if (n < 0) throw GraphError("negative vertex count");
    Graph g;
    g.n_ = n;
    g.edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                             std::to_string(n));
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    if (auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end()); dup != g.edges_.end())
        throw GraphError("duplicate edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ")");

    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : g.edges_) {
        ++deg[u];
        ++deg[v];
    }
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.adj_.resize(g.edges_.size() * 2);
    std::vector<int> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : g.edges_) {
        g.adj_[fill[u]++] = v;
        g.adj_[fill[v]++] = u;
    }
    for (int v = 0; v < n; ++v) std::sort(g.adj_.begin() + g.offsets_[v], g.adj_.begin() + g.offsets_[v + 1]);
    return g;
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int best = degree(0);
    for (int v = 1; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v)) return false;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

Rational Graph::density() const {
    if (n_ == 0) return Rational(0);
    return Rational(edge_count(), n_);
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
    std::vector<int> new_id(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Vertex v = vertices[i];
        if (!contains(v)) throw GraphError("induced: vertex out of range");
        if (new_id[v] != -1) throw GraphError("induced: repeated vertex");
        new_id[v] = static_cast<int>(i);
    }
    std::vector<Edge> kept;
    for (auto [u, v] : edges_)
        if (new_id[u] >= 0 && new_id[v] >= 0) kept.emplace_back(new_id[u], new_id[v]);
    return build(static_cast<int>(vertices.size()), kept);
}

VertexSet::VertexSet(int universe, std::span<const Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
}

VertexSet VertexSet::all(int universe) {
    VertexSet s(universe);
    s.members_.resize(static_cast<std::size_t>(universe));
    for (int v = 0; v < universe; ++v) {
        s.members_[v] = v;
        s.mask_[v] = 1;
    }
    return s;
}

void VertexSet::insert(Vertex v) {
    if (v < 0 || v >= universe_)
        throw GraphError("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(universe_));
    if (mask_[v]) return;
    mask_[v] = 1;
    members_.insert(std::lower_bound(members_.begin(), members_.end(), v), v);
}

void VertexSet::erase(Vertex v) {
    if (!contains(v)) return;
    mask_[v] = 0;
    members_.erase(std::lower_bound(members_.begin(), members_.end(), v));
}

int ComponentDecomposition::largest_size() const {
    const int idx = largest();
    return idx < 0 ? 0 : sizes[idx];
}

int ComponentDecomposition::largest() const {
    int best = -1;
    for (int c = 0; c < count(); ++c)
        if (best < 0 || sizes[c] > sizes[best]) best = c;
    return best;
}

std::vector<Vertex> ComponentDecomposition::members(int component) const {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < component_of.size(); ++v)
        if (component_of[v] == component) out.push_back(static_cast<Vertex>(v));
    return out;
}

ComponentDecomposition components(const Graph& g, const VertexSet& removed) {
    if (removed.universe() != g.vertex_count()) throw GraphError("components: vertex set universe mismatch");
    ComponentDecomposition dec;
    dec.component_of.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (removed.contains(s) || dec.component_of[s] != -1) continue;
        const int id = dec.count();
        int size = 0;
        dec.component_of[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            ++size;
            for (Vertex w : g.neighbors(u)) {
                if (removed.contains(w) || dec.component_of[w] != -1) continue;
                dec.component_of[w] = id;
                stack.push_back(w);
            }
        }
        dec.sizes.push_back(size);
    }
    return dec;
}

ComponentDecomposition components(const Graph& g) { return components(g, VertexSet(g.vertex_count())); }

std::vector<int> bfs_distances(const Graph& g, Vertex source, const VertexSet& allowed) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    if (!allowed.contains(source)) return dist;
    std::queue<Vertex> queue;
    dist[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop();
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] != -1 || !allowed.contains(w)) continue;
            dist[w] = dist[u] + 1;
            queue.push(w);
        }
    }
    return dist;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    return bfs_distances(g, source, VertexSet::all(g.vertex_count()));
}

std::optional<int> bfs_radius(const Graph& g, Vertex center, const VertexSet& within) {
    if (!within.contains(center)) throw GraphError("bfs_radius: center not in vertex set");
    const auto dist = bfs_distances(g, center, within);
    int radius = 0;
    for (Vertex v : within.members()) {
        if (dist[v] < 0) return std::nullopt;
        radius = std::max(radius, dist[v]);
    }
    return radius;
}

int degeneracy(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    std::vector<int> deg(static_cast<std::size_t>(n));
    int maxdeg = 0;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        maxdeg = std::max(maxdeg, deg[v]);
    }
    std::vector<std::vector<Vertex>> buckets(static_cast<std::size_t>(maxdeg) + 1);
    for (int v = 0; v < n; ++v) buckets[deg[v]].push_back(v);
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    int result = 0;
    int low = 0;
    for (int removed = 0; removed < n;) {
        low = std::max(0, low - 1);
        while (buckets[low].empty()) ++low;
        const Vertex v = buckets[low].back();
        buckets[low].pop_back();
        if (gone[v] || deg[v] != low) continue;  // stale bucket entry
        gone[v] = 1;
        ++removed;
        result = std::max(result, low);
        for (Vertex w : g.neighbors(v)) {
            if (gone[w]) continue;
            --deg[w];
            buckets[deg[w]].push_back(w);
        }
    }
    return result;
}

bool is_connected(const Graph& g) { return components(g).count() <= 1; }

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
    return out.str();
}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

long long to_number(std::string_view tok, int line_no) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw GraphError("line " + std::to_string(line_no) + ": expected integer, got '" + std::string(tok) + "'");
    return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    long long n = -1;
    long long m = -1;
    std::vector<Edge> edges;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tok = tokens(line);
        if (tok.empty()) {
            if (end == text.size()) break;
            continue;
        }
        if (tok[0] == "p") {
            if (n >= 0) throw GraphError("line " + std::to_string(line_no) + ": repeated header");
            if (tok.size() != 3) throw GraphError("line " + std::to_string(line_no) + ": header must be 'p <n> <m>'");
            n = to_number(tok[1], line_no);
            m = to_number(tok[2], line_no);
            if (n < 0 || m < 0 || n > 100'000'000) throw GraphError("line " + std::to_string(line_no) + ": bad header");
        } else if (tok[0] == "e") {
            if (n < 0) throw GraphError("line " + std::to_string(line_no) + ": edge before header");
            if (tok.size() != 3) throw GraphError("line " + std::to_string(line_no) + ": edge must be 'e <u> <v>'");
            const long long u = to_number(tok[1], line_no);
            const long long v = to_number(tok[2], line_no);
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw GraphError("line " + std::to_string(line_no) + ": vertex out of range");
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        } else {
            throw GraphError("line " + std::to_string(line_no) + ": unknown record '" + std::string(tok[0]) + "'");
        }
        if (end == text.size()) break;
    }
    if (n < 0) throw GraphError("missing 'p <n> <m>' header");
    if (static_cast<long long>(edges.size()) != m)
        throw GraphError("header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return Graph::build(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GraphError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw GraphError("cannot write '" + path + "'");
    out << to_edge_list(g);
}

}  // namespace sepminor
