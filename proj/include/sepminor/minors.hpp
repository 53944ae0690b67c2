#pragma once

#include "sepminor/generators.hpp"
#include "sepminor/graph.hpp"
#include "sepminor/rational.hpp"
#include "sepminor/witness.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sepminor {

/// Contraction of the cross edges of a verified witness; equals w.target
/// under the identity map. Throws std::invalid_argument on an invalid witness.
Graph contract_witness(const Graph& host, const MinorWitness& w);

/// Contracts each (disjoint) part to one vertex, keeping every host edge
/// between distinct parts. `representative[i]` is the lexicographically
/// smallest host edge realising contracted edge i, oriented part-wise.
struct Contraction {
    Graph graph;
    std::vector<Edge> representative;
};
Contraction contract_partition(const Graph& host, const std::vector<std::vector<Vertex>>& parts);

struct DenseSubgraph {
    std::vector<Vertex> vertices;
    Rational density;
};

/// Maximum |E(H)|/|V(H)| over nonempty vertex subsets, by Dinkelbach
/// iteration on min-cut (edge-node closure network).
DenseSubgraph densest_subgraph(const Graph& g);
/// Same value by enumerating all subsets; n <= budget.
DenseSubgraph densest_subgraph_exhaustive(const Graph& g, int budget = 24);

enum class UpperBoundSource { None, Degeneracy, GridDegree, CubicDegree, Planarity };
std::string to_string(UpperBoundSource source);

struct DensityReport {
    int depth = 0;
    Rational lower;
    MinorWitness witness;
    std::optional<Rational> upper;
    UpperBoundSource upper_source = UpperBoundSource::None;
};

/// Lower bound on nabla_r(G): partitions G into BFS balls of radius at most
/// rho (for every rho <= r, several seeded center orders each), contracts,
/// and keeps the densest subgraph of the best contraction.
DensityReport nabla_lower_greedy(const Graph& g, int r, std::uint64_t seed, int restarts = 4);

/// K_{a,b} with a = (2r)^(d/2)/2 and b = (2r)^(d/2) as an r-shallow minor of
/// king_grid(2r, d). Target vertices 0..a-1 are the slabs A_x with x_1
/// odd (1-based), a..a+b-1 are the slabs B_y.
MinorWitness slab_bipartite_witness(int d, int r, std::int64_t budget = kDefaultSizeBudget);

/// Branch-set radius needed by clique_witness_in_subdivided_clique: ceil(k/2)
/// for k subdivisions per edge (0 when m <= 1).
int subdivided_clique_radius(int m, const Rational& eps);

/// K_m as an r-shallow minor of subdivide_eps(complete(m), eps). Each
/// original vertex keeps the nearer half of every incident path; the middle
/// vertex of an odd path goes to the lower-id endpoint.
MinorWitness clique_witness_in_subdivided_clique(int m, const Rational& eps, int r);

/// A subgraph of the host that is a subdivision of a subcubic target.
struct SubdivisionEmbedding {
    /// Host vertex playing each target vertex.
    std::vector<Vertex> branch_vertices;
    /// Host path per target edge (target.edges() order), from the smaller target endpoint.
    std::vector<std::vector<Vertex>> paths;
    /// Internal vertices per path.
    std::vector<int> subdivisions;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
};

/// Turns each branch set into a subdivided star with at most three rays
/// and joins the stars along the cross edges.
SubdivisionEmbedding extract_subdivision(const Graph& host, const MinorWitness& w);

/// Checks the embedding is a subgraph of the host realising a subdivision
/// of `target` with at most `max_subdivisions` internal vertices per edge.
bool verify_subdivision(const Graph& host, const Graph& target, const SubdivisionEmbedding& emb, int max_subdivisions);

struct GridDegreeBound {
    std::uint64_t value = 0;
    /// Odd d: the bound is only proven for even dimensions.
    bool extrapolated = false;
};

/// floor((60r + 25)^(d/2)): every r-shallow minor of a king grid in
/// dimension d has minimum degree strictly below this.
GridDegreeBound grid_minor_degree_bound(int d, int r);

/// floor(2 + sqrt(m)): min-degree bound for shallow minors of a subdivided
/// cubic graph on m branch vertices.
std::int64_t subdivided_cubic_degree_bound(std::int64_t m);

/// Density bound 2 when 4r < k (the minor is then 2-degenerate), else nullopt.
std::optional<Rational> nabla_upper_degenerate(int r, int per_edge);

}  // namespace sepminor
