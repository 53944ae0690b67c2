#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "sepminor/generators.hpp"
#include "sepminor/separators.hpp"
#include "sepminor/treewidth.hpp"

using namespace sepminor;

TEST_CASE("exact treewidth examples") {
    CHECK(treewidth_exact(path(2)).value == 1);
    CHECK(treewidth_exact(random_tree(15, 3)).value == 1);
    for (int n = 1; n <= 8; ++n) CHECK(treewidth_exact(complete(n)).value == n - 1);
    CHECK(treewidth_exact(planar_grid(3)).value == 3);
    CHECK(treewidth_exact(planar_grid(4)).value == 4);
    CHECK(treewidth_exact(cycle(9)).value == 2);
    CHECK_THROWS_AS(treewidth_exact(path(19)), BudgetExceeded);
}

TEST_CASE("exact treewidth matches all elimination orders") {
    for (std::uint32_t seed = 0; seed < 40; ++seed) {
        const int n = 2 + static_cast<int>(seed % 7);
        const Graph g = oracle::random_connected(n, 0.35, seed);
        const auto tw = treewidth_exact(g);
        CHECK(tw.value == oracle::treewidth_by_permutations(g));
        CHECK(elimination_width(g, tw.elimination_order) == tw.value);
    }
}

TEST_CASE("min-fill is an upper bound and exact on easy classes") {
    for (std::uint32_t seed = 0; seed < 30; ++seed) {
        const Graph g = oracle::random_connected(10 + static_cast<int>(seed % 6), 0.3, seed);
        const auto upper = treewidth_minfill(g);
        CHECK(upper.method == TreewidthMethod::MinFillUpper);
        CHECK(treewidth_exact(g).value <= upper.value);
        CHECK(elimination_width(g, upper.elimination_order) == upper.value);
    }
    CHECK(treewidth_minfill(random_tree(60, 1)).value == 1);
    CHECK(treewidth_minfill(complete(9)).value == 8);
    CHECK(treewidth_minfill(cycle(20)).value == 2);
}

TEST_CASE("separator numbers and the 15k bound") {
    CHECK(tw_upper_from_separators(1) == 15);
    CHECK(max_induced_separator_number(complete(6)) == 2);
    CHECK(max_induced_separator_number(path(9)) == 1);
    CHECK_THROWS(max_induced_separator_number(path(10)));
    const int k = max_induced_separator_number(complete(6));
    CHECK(treewidth_exact(complete(6)).value <= tw_upper_from_separators(k));
    for (std::uint32_t seed = 0; seed < 15; ++seed) {
        const Graph g = oracle::random_connected(3 + static_cast<int>(seed % 7), 0.4, seed);
        CHECK(treewidth_exact(g).value <= tw_upper_from_separators(max_induced_separator_number(g)));
    }
}

TEST_CASE("separators from decompositions") {
    const auto p = separator_from_treewidth(path(20), 1);
    CHECK(revalidate(path(20), p));
    CHECK(p.size() <= 2);
    const Graph g3 = planar_grid(3);
    const auto s3 = separator_from_treewidth(g3, 3);
    CHECK(revalidate(g3, s3));
    CHECK(s3.size() <= 4);
    const auto k5 = separator_from_treewidth(complete(5), 4);
    CHECK(revalidate(complete(5), k5));
    CHECK(k5.size() <= 5);
    CHECK_THROWS_AS(separator_from_treewidth(complete(5), 3), std::invalid_argument);
    for (std::uint32_t seed = 0; seed < 20; ++seed) {
        const Graph g = oracle::random_connected(12, 0.25, seed);
        const int c = treewidth_exact(g).value;
        const auto cert = separator_from_treewidth(g, c);
        CHECK(revalidate(g, cert));
        CHECK(cert.size() <= c + 1);
    }
}

TEST_CASE("subdivision inverse and transfer bound") {
    CHECK(subdivision_inverse(100, Rational(1, 2)) == 10);
    CHECK(subdivision_inverse(99, Rational(1, 2)) == 9);
    CHECK(subdivision_inverse(2, Rational(1, 2)) == 1);
    CHECK(subdivision_inverse(0, Rational(1, 2)) == 1);
    CHECK(subdivision_inverse(40, Rational(2, 3)) == 3);  // 3*9 = 27 <= 40 < 4*16
    CHECK(subdivided_separator_bound(50, Rational(1, 2), SeparatorProfile{1.0, 1.0}) == doctest::Approx(151));
    CHECK(subdivided_separator_bound(1, Rational(1, 2), SeparatorProfile{1.0, 1.0}) >= 16);
    double prev = 0;
    for (std::int64_t n = 1; n <= 3000; n += 7) {
        const double b = subdivided_separator_bound(n, Rational(1, 2), SeparatorProfile{1.0, 1.0});
        CHECK(prev <= b);
        prev = b;
    }
}
