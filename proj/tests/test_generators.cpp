#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sepminor/generators.hpp"

#include <set>

using namespace sepminor;

TEST_CASE("king grid") {
    CHECK(king_grid(4, 1).edge_count() == 5);
    const Graph g = king_grid(5, 2);
    CHECK(g.vertex_count() == 25);
    // vertex (2,2) reaches every coordinate within distance 2
    CHECK(g.degree(king_grid_id(5, std::vector<int>{2, 2})) == 24);
    for (Vertex v = 0; v < 25; ++v) CHECK(king_grid_id(5, king_grid_coords(5, 2, v)) == v);
    CHECK(king_grid_coords(5, 2, 7) == std::vector<int>{1, 2});
    CHECK_THROWS(king_grid(100, 4, 1000));
}

TEST_CASE("uniform subdivision") {
    const auto s = subdivide_uniform(complete(4), 4);
    CHECK(s.graph.vertex_count() == 28);
    CHECK(s.graph.edge_count() == 30);
    CHECK(s.paths.size() == 6);
    // internal vertices of base edge i are 4 + 4i .. 4 + 4i + 3
    CHECK(s.paths[1] == std::vector<Vertex>{0, 8, 9, 10, 11, 2});
    for (const auto& p : s.paths)
        for (std::size_t i = 0; i + 1 < p.size(); ++i) CHECK(s.graph.has_edge(p[i], p[i + 1]));
}

TEST_CASE("eps subdivision counts") {
    const auto k3 = subdivide_eps(complete(3), Rational(1, 3));
    CHECK(k3.per_edge == 2);  // ceil(3^(1/2))
    CHECK(k3.graph.vertex_count() == 9);
    CHECK(eps_subdivision_count(9, Rational(1, 2)) == 9);
    CHECK(eps_subdivision_count(4, Rational(2, 3)) == 16);
    CHECK(eps_subdivision_count(10, Rational(1, 3)) == 4);  // ceil(sqrt 10)
    CHECK(sgr_subdivision_count(9, Rational(3, 4)) == 9);
    CHECK(sgr_subdivision_count(100, Rational(1, 2)) == 1);
    CHECK(subdivide_sgr(planar_grid(3), Rational(3, 4)).per_edge == 9);
}

TEST_CASE("fixed families") {
    CHECK(planar_grid(4).edge_count() == 24);
    CHECK(complete(6).edge_count() == 15);
    CHECK(cycle(5).min_degree() == 2);
    CHECK(star(4).max_degree() == 4);
}

TEST_CASE("random regular") {
    CHECK_THROWS_AS(random_regular(5, 3, 1), GeneratorError);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = random_regular(20, 3, seed);
        CHECK(g.min_degree() == 3);
        CHECK(g.max_degree() == 3);
    }
    CHECK(random_regular(30, 3, 9) == random_regular(30, 3, 9));
    CHECK_FALSE(random_regular(30, 3, 9) == random_regular(30, 3, 10));
}

TEST_CASE("random tree and gnp") {
    const Graph t = random_tree(40, 3);
    CHECK(t.edge_count() == 39);
    CHECK(is_connected(t));
    CHECK(random_gnp(30, 1, 1, 0).edge_count() == 435);
    CHECK(random_gnp(30, 0, 1, 0).edge_count() == 0);
}

TEST_CASE("family specs") {
    FamilySpec spec;
    spec.kind = parse_family_kind("subdivided-cubic");
    spec.size = 10;
    spec.eps = Rational(1, 2);
    spec.seed = 4;
    const auto gen = generate(spec);
    CHECK(gen.per_edge == 10);
    CHECK(gen.base_vertices == 10);
    CHECK(gen.graph.vertex_count() == 10 + 15 * 10);
    CHECK(generate(spec).graph == gen.graph);
    CHECK_THROWS(parse_family_kind("hypercube"));
    spec.eps = Rational(3, 2);
    CHECK_THROWS_AS(generate(spec), GeneratorError);
}

TEST_CASE("generator identities and counting formulas") {
    CHECK(king_grid(2, 2) == complete(4));
    for (int n = 2; n <= 12; ++n) CHECK(king_grid(n, 1).edge_count() == 2 * n - 3);
    for (int d = 1; d <= 3; ++d) {
        int five = 1;
        for (int j = 0; j < d; ++j) five *= 5;
        CHECK(king_grid(6, d).max_degree() < five);
    }
    const Graph g = random_gnp(12, 1, 3, 8);
    CHECK(subdivide_uniform(g, 0).graph == g);
    const Graph p5 = subdivide_uniform(path(2), 3).graph;
    CHECK(p5 == Graph::build(5, {{0, 2}, {2, 3}, {3, 4}, {1, 4}}));  // 0-2-3-4-1, a path on 5 vertices
    for (int k = 0; k <= 5; ++k) {
        const auto s = subdivide_uniform(g, k);
        CHECK(s.graph.vertex_count() == 12 + k * g.edge_count());
        CHECK(s.graph.edge_count() == (k + 1) * g.edge_count());
    }
    CHECK(planar_grid(2) == Graph::build(4, {{0, 1}, {1, 3}, {3, 2}, {2, 0}}));  // the 4-cycle 0-1-3-2
    CHECK(planar_grid(3).edge_count() == 12);
    CHECK(complete(5).edge_count() == 10);
    CHECK(subdivide_sgr(planar_grid(4), Rational(1, 2)).per_edge == 1);
    CHECK_THROWS(subdivide_sgr(planar_grid(4), Rational(1, 3)));
    CHECK_THROWS(subdivide_eps(complete(4), Rational(1)));
    int prev = 0;
    for (int q = 1; q <= 9; ++q) {
        const int k = eps_subdivision_count(7, Rational(q, 10));
        CHECK(prev <= k);
        prev = k;
    }
}

TEST_CASE("small random regular graphs") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK(random_regular(4, 3, seed) == complete(4));
    const Graph g = random_regular(20, 3, 12);
    CHECK(g.edge_count() == 30);
    CHECK_THROWS_AS(random_regular(4, 4, 1), GeneratorError);
}

TEST_CASE("subdivided families keep their base graph") {
    FamilySpec spec;
    spec.kind = FamilyKind::SubdividedPlanarGrid;
    spec.size = 3;
    spec.eps = Rational(3, 4);
    const auto gen = generate(spec);
    REQUIRE(gen.base.has_value());
    CHECK(*gen.base == planar_grid(3));
    CHECK(gen.per_edge == 9);
    spec.kind = FamilyKind::PlanarGrid;
    CHECK_FALSE(generate(spec).base.has_value());
}
