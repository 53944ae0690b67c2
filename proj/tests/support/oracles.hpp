#pragma once

// Slow reference implementations for tests. They share nothing with the
// library beyond the Graph container: plain adjacency matrices, explicit
// subset loops, union-find.

#include "sepminor/graph.hpp"
#include "sepminor/rational.hpp"
#include "sepminor/witness.hpp"

#include <cstdint>
#include <vector>

namespace oracle {

using sepminor::Graph;
using sepminor::Rational;

using Matrix = std::vector<std::vector<bool>>;
Matrix adjacency_matrix(const Graph& g);

/// Component sizes of G minus `removed` by union-find, sorted descending.
std::vector<int> component_sizes(const Graph& g, const std::vector<bool>& removed);

/// Minimum balanced separator size over all subsets.
int min_separator_size(const Graph& g);

/// Minimum elimination width over all n! vertex orders.
int treewidth_by_permutations(const Graph& g);

/// max |E(H)|/|V(H)| over all nonempty vertex subsets.
Rational densest_density(const Graph& g);

/// min |N(S)|/|S| over nonempty S with |S| <= n/2.
Rational min_expansion(const Graph& g);

/// Independent witness check: disjoint connected branch sets, all-pairs
/// distances inside each set for the radius, cross edges present.
bool witness_valid(const Graph& host, const sepminor::MinorWitness& w);

/// Connected random graph from a std::mt19937: random attachment tree plus
/// extra edges with probability `p`.
Graph random_connected(int n, double p, std::uint32_t seed);

/// All labelled connected graphs on n vertices (use n <= 6).
std::vector<Graph> all_connected_graphs(int n);

}  // namespace oracle
