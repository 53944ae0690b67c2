#pragma once

#include "sepminor/graph.hpp"
#include "sepminor/rational.hpp"
#include "sepminor/witness.hpp"

#include <cstdint>
#include <optional>
#include <variant>

namespace sepminor {

inline constexpr int kDefaultExactBudget = 24;

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Components of G - X may have at most floor(2n/3) vertices.
inline int balance_threshold(int n) { return 2 * n / 3; }

struct SeparatorCertificate {
    VertexSet separator;
    int largest_component = 0;
    int n = 0;

    [[nodiscard]] int size() const { return separator.size(); }
};

bool is_balanced_separator(const Graph& g, const VertexSet& x);

/// Builds the certificate for `x`; throws std::logic_error if x is not balanced.
SeparatorCertificate certify_separator(const Graph& g, VertexSet x);

/// Recomputes balance and the recorded largest component size.
bool revalidate(const Graph& g, const SeparatorCertificate& cert);

/// s(G) by increasing-cardinality subset search. Ties go to the first set
/// in ascending bitmask order.
SeparatorCertificate min_balanced_separator_exact(const Graph& g, int budget = kDefaultExactBudget);

enum class SeparatorStrategy { BfsLayer, RecursiveBisection };

/// Certified balanced separator without optimality claim; an upper bound on s(G).
SeparatorCertificate separator_heuristic(const Graph& g, SeparatorStrategy strategy = SeparatorStrategy::BfsLayer);

/// Drops separator vertices (ascending id) whose removal keeps X balanced.
VertexSet prune_separator(const Graph& g, VertexSet x);

/// Either a balanced separator of size <= n/l + 2h^2 l log2 n or a
/// depth-(2l log2 n) shallow minor of K_h. Both branches are verified
/// before being returned.
struct PrsOutcome {
    std::variant<SeparatorCertificate, MinorWitness> result;
    int n = 0;
    int l = 0;
    int h = 0;
    /// floor(2 l log2 n), the radius allowed for branch sets.
    int depth = 0;

    [[nodiscard]] bool is_separator() const { return std::holds_alternative<SeparatorCertificate>(result); }
    [[nodiscard]] const SeparatorCertificate& separator() const { return std::get<SeparatorCertificate>(result); }
    [[nodiscard]] const MinorWitness& minor() const { return std::get<MinorWitness>(result); }
    /// Real value of n/l + 2h^2 l log2 n (for reporting; checks are exact).
    [[nodiscard]] double separator_bound() const;
};

PrsOutcome prs_separator_or_minor(const Graph& g, int l, int h);

/// Independent check of an outcome against its stated bound.
bool verify_prs_outcome(const Graph& g, const PrsOutcome& outcome);

struct PrsParameters {
    std::int64_t n = 0;
    std::int64_t l = 0;
    std::int64_t h = 0;
    /// n >= 2, l >= 1 and h >= 1.
    bool feasible = false;
    bool separator_term_dominates = false;  // 2h^2 l log2 n < n/l
    bool n_eps_below_r = false;             // n^eps <= r log2^-2 r <= r
    bool log_n_bounded = false;             // log2 n <= (1/eps) log2 r
    bool depth_sandwich = false;            // 2l log2 n <= r <= 3l log2 n

    [[nodiscard]] bool all_inequalities() const {
        return separator_term_dominates && n_eps_below_r && log_n_bounded && depth_sandwich;
    }
};

/// n = floor(r^(1/eps) log2^(-2/eps) r), l = floor(r / (2 log2 n)),
/// h = floor(n^(1/2) / (2 l log2 n)). Throws when n < 2 or l < 1.
PrsParameters prs_parameters(std::int64_t r, const Rational& eps);

struct ExpanderCheck {
    bool expander = true;
    std::optional<VertexSet> violating;
};

/// |N(S)| >= alpha |S| for every nonempty S with |S| <= floor(n/2);
/// N(S) is the set of vertices outside S with a neighbour in S.
ExpanderCheck is_alpha_expander_exact(const Graph& g, const Rational& alpha, int budget = kDefaultExactBudget);

/// Smallest |N(S)|/|S| over sampled connected S with |S| <= n/2 (BFS balls
/// and random connected growth). Only an upper bound on the expansion.
/// nullopt when the graph has fewer than two vertices (no admissible S).
std::optional<Rational> expansion_upper_estimate(const Graph& g, int samples, std::uint64_t seed);

}  // namespace sepminor
