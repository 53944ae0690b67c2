#pragma once

#include "sepminor/graph.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace sepminor {

/// Certificate that `target` is a `depth`-shallow minor of a host graph.
///
/// Target vertex t is obtained by contracting branch_sets[t], a connected
/// vertex set of the host of radius at most `depth` around centers[t].
/// cross_edges[i] is the host edge realising target.edges()[i]; its first
/// endpoint lies in the branch set of the smaller target endpoint.
struct MinorWitness {
    int depth = 0;
    Graph target;
    std::vector<std::vector<Vertex>> branch_sets;
    std::vector<Vertex> centers;
    std::vector<Edge> cross_edges;
};

struct WitnessCheck {
    bool ok = true;
    /// Name of the first violated condition, empty when ok.
    std::string violation;
    std::string detail;

    explicit operator bool() const { return ok; }
};

/// Checks every witness invariant against `host`, in this order:
/// shape, range, disjointness, center, connectivity, radius, cross-edge.
WitnessCheck verify_minor_witness(const Graph& host, const MinorWitness& w);

/// Witness for G itself at depth 0 (singleton branch sets).
MinorWitness identity_witness(const Graph& g);

/// Same witness restricted to the target subgraph induced by `keep`
/// (renumbered in the order given).
MinorWitness restrict_witness(const MinorWitness& w, std::span<const Vertex> keep);

// JSON schema: {r, target:{n, edges}, branch_sets:{tv:[ids]}, centers:{tv:id},
// cross_edges:{"u-v":[hu,hv]}}
nlohmann::json witness_to_json(const MinorWitness& w);
MinorWitness witness_from_json(const nlohmann::json& j);

}  // namespace sepminor
