#pragma once

#include "sepminor/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sepminor {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are stored normalized (u < v) and sorted; adjacency lists are
/// sorted ascending, which gives every traversal in the library a
/// deterministic order.
class Graph {
public:
    Graph() = default;

    /// Rejects out-of-range endpoints, self-loops and duplicate edges.
    static Graph build(int n, std::span<const Edge> edges);
    static Graph build(int n, std::initializer_list<Edge> edges) {
        return build(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    [[nodiscard]] int vertex_count() const { return n_; }
    [[nodiscard]] std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }
    [[nodiscard]] std::span<const Edge> edges() const { return edges_; }
    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    [[nodiscard]] int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    [[nodiscard]] int max_degree() const;
    [[nodiscard]] int min_degree() const;
    [[nodiscard]] bool has_edge(Vertex u, Vertex v) const;
    [[nodiscard]] bool contains(Vertex v) const { return v >= 0 && v < n_; }

    /// |E|/|V|; zero for the empty graph.
    [[nodiscard]] Rational density() const;

    /// Subgraph induced by `vertices` (listed in the order that becomes the new ids).
    [[nodiscard]] Graph induced(std::span<const Vertex> vertices) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> offsets_{0};
    std::vector<Vertex> adj_;
};

/// Subset of the vertices of a host graph with `universe` vertices.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : universe_(universe), mask_(static_cast<std::size_t>(universe), 0) {}
    VertexSet(int universe, std::span<const Vertex> members);
    VertexSet(int universe, std::initializer_list<Vertex> members)
        : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}
    static VertexSet all(int universe);

    [[nodiscard]] int universe() const { return universe_; }
    [[nodiscard]] int size() const { return static_cast<int>(members_.size()); }
    [[nodiscard]] bool empty() const { return members_.empty(); }
    [[nodiscard]] bool contains(Vertex v) const {
        return v >= 0 && v < universe_ && mask_[static_cast<std::size_t>(v)] != 0;
    }
    /// Sorted ascending.
    [[nodiscard]] std::span<const Vertex> members() const { return members_; }

    void insert(Vertex v);
    void erase(Vertex v);

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.universe_ == b.universe_ && a.members_ == b.members_;
    }

private:
    int universe_ = 0;
    std::vector<char> mask_;
    std::vector<Vertex> members_;
};

/// Connected components of G - removed. Removed vertices get component -1.
struct ComponentDecomposition {
    std::vector<int> component_of;
    std::vector<int> sizes;

    [[nodiscard]] int count() const { return static_cast<int>(sizes.size()); }
    [[nodiscard]] int largest_size() const;
    /// Index of the largest component (lowest index on ties), or -1 if none.
    [[nodiscard]] int largest() const;
    [[nodiscard]] std::vector<Vertex> members(int component) const;
};

ComponentDecomposition components(const Graph& g, const VertexSet& removed);
ComponentDecomposition components(const Graph& g);

/// Eccentricity of `center` inside G[within]; nullopt if some vertex of
/// `within` is unreachable from `center` without leaving `within`.
std::optional<int> bfs_radius(const Graph& g, Vertex center, const VertexSet& within);

/// BFS distances from `source` restricted to `allowed` (-1 = unreached).
std::vector<int> bfs_distances(const Graph& g, Vertex source, const VertexSet& allowed);
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Smallest k such that every subgraph has a vertex of degree <= k.
int degeneracy(const Graph& g);

bool is_connected(const Graph& g);

// Edge-list text format: "p <n> <m>" followed by m lines "e <u> <v>".
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace sepminor
