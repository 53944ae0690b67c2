#pragma once

#include "sepminor/graph.hpp"
#include "sepminor/rational.hpp"
#include "sepminor/separators.hpp"

#include <string>
#include <vector>

namespace sepminor {

inline constexpr int kTreewidthExactBudget = 18;
inline constexpr int kInducedSeparatorBudget = 9;

enum class TreewidthMethod { ExactDp, MinFillUpper, SeparatorDerivedUpper };
std::string to_string(TreewidthMethod method);

struct TreewidthResult {
    int value = 0;
    TreewidthMethod method = TreewidthMethod::ExactDp;
    /// Elimination order realising `value`; empty for separator-derived bounds.
    std::vector<Vertex> elimination_order;
};

/// Exact treewidth by dynamic programming over vertex subsets.
TreewidthResult treewidth_exact(const Graph& g, int budget = kTreewidthExactBudget);

/// Greedy min-fill elimination (ties: smaller degree, then smaller id).
TreewidthResult treewidth_minfill(const Graph& g);

/// Largest later-neighbourhood in the fill-in graph of `order`.
int elimination_width(const Graph& g, std::span<const Vertex> order);

/// Bags {v} + later neighbours of v in the filled graph, one per vertex,
/// listed in elimination order.
std::vector<std::vector<Vertex>> elimination_bags(const Graph& g, std::span<const Vertex> order);

/// 15k: the treewidth bound implied by s(H) <= k on every induced subgraph H.
int tw_upper_from_separators(int k);

/// max over nonempty induced subgraphs H of s(H), exhaustively; refuses
/// graphs with more than kInducedSeparatorBudget vertices.
int max_induced_separator_number(const Graph& g);

/// Balanced separator of size <= c + 1 taken from a bag of a width-<=c
/// decomposition (exact below the DP budget, min-fill above). Throws
/// std::invalid_argument when no such decomposition is available.
SeparatorCertificate separator_from_treewidth(const Graph& g, int c);

/// Separator profile f(x) = coefficient * x^power of the base class.
struct SeparatorProfile {
    double coefficient = 1.0;
    double power = 1.0;
};

/// Largest integer x >= 1 with x * ceil(x^(eps/(1-eps))) <= y (1 if none).
std::int64_t subdivision_inverse(std::int64_t y, const Rational& eps);

/// Separator size bound for any induced subgraph on `vertices` vertices of a
/// subdivided member of a class with separator profile f:
/// 15 f(p(2 vertices)) + 1 with p = subdivision_inverse.
double subdivided_separator_bound(std::int64_t vertices, const Rational& eps, const SeparatorProfile& f);

}  // namespace sepminor
