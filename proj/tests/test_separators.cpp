#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "sepminor/generators.hpp"
#include "sepminor/intmath.hpp"
#include "sepminor/separators.hpp"

#include <cmath>

using namespace sepminor;

TEST_CASE("exact separator examples") {
    CHECK(min_balanced_separator_exact(path(5)).size() == 1);
    CHECK(min_balanced_separator_exact(complete(6)).size() == 2);
    CHECK(min_balanced_separator_exact(cycle(6)).size() == 2);
    for (int n = 3; n <= 12; ++n) CHECK(min_balanced_separator_exact(complete(n)).size() == (n + 2) / 3);
    CHECK(min_balanced_separator_exact(Graph::build(2, {})).size() == 0);
    CHECK_THROWS_AS(min_balanced_separator_exact(path(30)), BudgetExceeded);
    CHECK(min_balanced_separator_exact(path(30), 30).size() == 1);
}

TEST_CASE("exact separator equals subset enumeration on all small connected graphs") {
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : oracle::all_connected_graphs(n))
            CHECK(min_balanced_separator_exact(g).size() == oracle::min_separator_size(g));
}

TEST_CASE("certificates revalidate") {
    const Graph g = planar_grid(4);
    const auto cert = min_balanced_separator_exact(g);
    CHECK(revalidate(g, cert));
    CHECK(cert.size() == oracle::min_separator_size(g));
    auto forged = cert;
    forged.largest_component += 1;
    CHECK_FALSE(revalidate(g, forged));
    CHECK_THROWS_AS(certify_separator(g, VertexSet(16, {0})), std::logic_error);
}

TEST_CASE("heuristics") {
    for (auto strategy : {SeparatorStrategy::BfsLayer, SeparatorStrategy::RecursiveBisection}) {
        CHECK(separator_heuristic(path(100), strategy).size() == 1);
        CHECK(separator_heuristic(complete(9), strategy).size() == 3);
        CHECK(separator_heuristic(planar_grid(10), strategy).size() <= 10);
        CHECK(separator_heuristic(Graph::build(7, {}), strategy).size() == 0);
    }
    // never below the exact optimum, always valid
    for (std::uint32_t seed = 0; seed < 60; ++seed) {
        const Graph g = oracle::random_connected(4 + static_cast<int>(seed % 7), 0.3, seed);
        const int exact = min_balanced_separator_exact(g).size();
        for (auto strategy : {SeparatorStrategy::BfsLayer, SeparatorStrategy::RecursiveBisection}) {
            const auto cert = separator_heuristic(g, strategy);
            CHECK(revalidate(g, cert));
            CHECK(exact <= cert.size());
        }
    }
}

TEST_CASE("prs dichotomy examples") {
    const auto k10 = prs_separator_or_minor(complete(10), 1, 3);
    REQUIRE_FALSE(k10.is_separator());
    CHECK(k10.minor().target == complete(3));
    CHECK(verify_prs_outcome(complete(10), k10));

    const auto p100 = prs_separator_or_minor(path(100), 2, 4);
    REQUIRE(p100.is_separator());
    CHECK(verify_prs_outcome(path(100), p100));
    CHECK(p100.separator().size() <= 100.0 / 2 + 2 * 16 * 2 * std::log2(100.0));

    const auto s = prs_separator_or_minor(star(50), 5, 3);
    REQUIRE(s.is_separator());
    CHECK(s.separator().size() == 1);
    CHECK(s.separator().separator.contains(0));
}

TEST_CASE("prs on trees and grids") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const Graph t = random_tree(30 + static_cast<int>(seed) * 9, seed);
        for (int h = 3; h <= 5; ++h) {
            const auto out = prs_separator_or_minor(t, 1 + static_cast<int>(seed % 3), h);
            CHECK(out.is_separator());
            CHECK(verify_prs_outcome(t, out));
        }
    }
    const Graph g = king_grid(8, 2);
    for (int h = 2; h <= 6; ++h) CHECK(verify_prs_outcome(g, prs_separator_or_minor(g, 2, h)));
}

TEST_CASE("prs bound arithmetic") {
    using intmath::floor_two_l_log2;
    CHECK(floor_two_l_log2(100, 1) == 13);  // 2 log2 100 = 13.28
    CHECK(floor_two_l_log2(16, 1) == 8);
    CHECK(floor_two_l_log2(1, 3) == 0);
    // 10/1 + 2*9*1*log2(10) = 69.79...
    CHECK(intmath::within_prs_bound(69, 10, 1, 3));
    CHECK_FALSE(intmath::within_prs_bound(70, 10, 1, 3));
}

TEST_CASE("prs parameters") {
    const auto p = prs_parameters(std::int64_t{1} << 20, Rational(1, 2));
    CHECK(p.n == (std::int64_t{1} << 40) / 160000);
    CHECK(p.all_inequalities());
    CHECK(p.l == static_cast<std::int64_t>(std::floor((1 << 20) / (2 * std::log2(static_cast<double>(p.n))))));
    for (std::int64_t r : {std::int64_t{1} << 12, std::int64_t{1} << 16, std::int64_t{1} << 24}) {
        for (const Rational eps : {Rational(1, 2), Rational(2, 3), Rational(1)}) {
            const auto q = prs_parameters(r, eps);
            if (q.feasible) CHECK(2.0 * q.l * std::log2(static_cast<double>(q.n)) <= static_cast<double>(r));
        }
    }
    const auto e1 = prs_parameters(1 << 10, Rational(1));
    CHECK(e1.n == (1 << 10) / 100);
    CHECK_THROWS(prs_parameters(2, Rational(1, 2)));
}

TEST_CASE("expander checks") {
    CHECK(is_alpha_expander_exact(complete(4), Rational(1)).expander);
    const auto p8 = is_alpha_expander_exact(path(8), Rational(1, 2));
    REQUIRE_FALSE(p8.expander);
    CHECK(p8.violating->members().size() == 3);
    CHECK(p8.violating.value() == VertexSet(8, {0, 1, 2}));
    CHECK(is_alpha_expander_exact(cycle(6), Rational(1, 3)).expander);
    CHECK_THROWS_AS(is_alpha_expander_exact(path(30), Rational(1)), BudgetExceeded);
}

TEST_CASE("sampled expansion is an upper bound") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Graph g = random_regular(20, 3, seed);
        const Rational exact = oracle::min_expansion(g);
        const auto est = expansion_upper_estimate(g, 40, seed);
        REQUIRE(est.has_value());
        CHECK(exact <= *est);
        // the exact checker agrees at the true constant
        CHECK(is_alpha_expander_exact(g, exact).expander);
    }
    CHECK(*expansion_upper_estimate(complete(9), 20, 1) >= Rational(1));
    CHECK(*expansion_upper_estimate(path(200), 30, 1) <= Rational(1, 50));
    CHECK_FALSE(expansion_upper_estimate(Graph::build(1, {}), 5, 1).has_value());
}
