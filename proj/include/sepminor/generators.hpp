#pragma once

#include "sepminor/graph.hpp"
#include "sepminor/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sepminor {

inline constexpr std::int64_t kDefaultSizeBudget = std::int64_t{1} << 20;

/// Q_n^d: vertices {0..n-1}^d, adjacent when every coordinate differs by at
/// most 2. Vertex id is row-major with the last coordinate varying fastest.
Graph king_grid(int n, int d, std::int64_t budget = kDefaultSizeBudget);
Vertex king_grid_id(int n, std::span<const int> coords);
std::vector<int> king_grid_coords(int n, int d, Vertex id);

/// Result of replacing every edge by a path with `per_edge` internal vertices.
///
/// Original vertices keep their ids. The internal vertices of edge i
/// (index into base.edges(), oriented from the smaller endpoint) are
/// base_n + i*per_edge + 0 .. per_edge-1.
struct Subdivision {
    Graph graph;
    int base_vertices = 0;
    int per_edge = 0;
    /// Full path per base edge, endpoints included.
    std::vector<std::vector<Vertex>> paths;

    [[nodiscard]] bool is_branch_vertex(Vertex v) const { return v < base_vertices; }
};

Subdivision subdivide_uniform(const Graph& g, int per_edge);

/// ceil(m^(eps/(1-eps))), computed exactly. Requires 0 < eps < 1.
int eps_subdivision_count(int m, const Rational& eps);
/// ceil(m^((2eps-1)/(2-2eps))), computed exactly. Requires 1/2 <= eps < 1.
int sgr_subdivision_count(int m, const Rational& eps);

/// G^eps: every edge subdivided eps_subdivision_count(|V(G)|, eps) times.
Subdivision subdivide_eps(const Graph& g, const Rational& eps);
/// Every edge subdivided sgr_subdivision_count(|V(G)|, eps) times.
Subdivision subdivide_sgr(const Graph& g, const Rational& eps);

/// t x t grid, id = row*t + col; 2t(t-1) edges.
Graph planar_grid(int t);
Graph complete(int m);
Graph path(int n);
Graph cycle(int n);
Graph star(int leaves);

class GeneratorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Simple deg-regular graph from the pairing model; pairings with loops or
/// repeated edges are rejected and redrawn up to `retries` times.
Graph random_regular(int n, int deg, std::uint64_t seed, int retries = 1000);

/// Uniform random labelled tree (Pruefer sequence).
Graph random_tree(int n, std::uint64_t seed);
/// G(n, p) with p = num/den.
Graph random_gnp(int n, std::uint64_t num, std::uint64_t den, std::uint64_t seed);

enum class FamilyKind {
    KingGrid,
    SubdividedCubic,
    SubdividedClique,
    SubdividedPlanarGrid,
    PlanarGrid,
    Complete,
    Path,
    Cycle,
    RandomRegular,
};

std::string to_string(FamilyKind kind);
FamilyKind parse_family_kind(std::string_view name);

/// A parameterised family member. `size` is the side length for grids, the
/// base vertex count for subdivided families and the vertex count otherwise.
struct FamilySpec {
    FamilyKind kind = FamilyKind::Path;
    int size = 1;
    int d = 2;
    Rational eps{1, 2};
    int degree = 3;
    std::uint64_t seed = 0;

    [[nodiscard]] std::string params() const;
    void validate() const;
};

struct GeneratedGraph {
    Graph graph;
    FamilySpec spec;
    /// Subdivisions per base edge for subdivided kinds, 0 otherwise.
    int per_edge = 0;
    int base_vertices = 0;
    std::string mapping;
    /// Graph before subdivision, for the subdivided kinds.
    std::optional<Graph> base;
};

GeneratedGraph generate(const FamilySpec& spec, std::int64_t budget = kDefaultSizeBudget);

}  // namespace sepminor
