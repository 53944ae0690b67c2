#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "sepminor/generators.hpp"
#include "sepminor/graph.hpp"

#include <numeric>

using namespace sepminor;

TEST_CASE("build rejects malformed edge lists") {
    CHECK_THROWS_AS(Graph::build(3, {{0, 3}}), GraphError);
    CHECK_THROWS_AS(Graph::build(3, {{-1, 2}}), GraphError);
    CHECK_THROWS_AS(Graph::build(3, {{1, 1}}), GraphError);
    CHECK_THROWS_AS(Graph::build(3, {{0, 1}, {1, 0}}), GraphError);
}

TEST_CASE("small graphs") {
    const Graph p3 = Graph::build(3, {{0, 1}, {1, 2}});
    CHECK(p3.edge_count() == 2);
    CHECK(p3.degree(1) == 2);
    CHECK(p3 == path(3));

    const Graph single = Graph::build(1, {});
    CHECK(single.density() == Rational(0));

    const Graph k4 = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(k4.density() == Rational(3, 2));
    CHECK(k4.min_degree() == 3);
}

TEST_CASE("adjacency is symmetric and sorted") {
    const Graph g = oracle::random_connected(25, 0.2, 11);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto nb = g.neighbors(v);
        CHECK(std::is_sorted(nb.begin(), nb.end()));
        for (Vertex w : nb) CHECK(g.has_edge(w, v));
    }
    std::int64_t degree_sum = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) degree_sum += g.degree(v);
    CHECK(degree_sum == 2 * g.edge_count());
}

TEST_CASE("components") {
    auto sizes = [](const ComponentDecomposition& d) {
        auto s = d.sizes;
        std::sort(s.begin(), s.end());
        return s;
    };
    CHECK(sizes(components(path(5), VertexSet(5, {2}))) == std::vector<int>{2, 2});
    CHECK(sizes(components(complete(6), VertexSet(6))) == std::vector<int>{6});
    const auto c6 = components(cycle(6), VertexSet(6, {0, 3}));
    CHECK(sizes(c6) == std::vector<int>{2, 2});
    CHECK(c6.component_of[0] == -1);
    CHECK(c6.component_of[1] == c6.component_of[2]);
}

TEST_CASE("components agree with union-find on random removals") {
    for (std::uint32_t seed = 0; seed < 40; ++seed) {
        const Graph g = oracle::random_connected(20, 0.08, seed);
        std::vector<bool> removed(20, false);
        VertexSet x(20);
        for (int v = 0; v < 20; ++v)
            if ((seed * 7 + static_cast<unsigned>(v) * 13) % 5 == 0) removed[v] = true, x.insert(v);
        const auto dec = components(g, x);
        auto mine = dec.sizes;
        std::sort(mine.rbegin(), mine.rend());
        CHECK(mine == oracle::component_sizes(g, removed));
        CHECK(std::accumulate(dec.sizes.begin(), dec.sizes.end(), 0) == 20 - x.size());
        for (auto [u, v] : g.edges())
            if (!x.contains(u) && !x.contains(v)) CHECK(dec.component_of[u] == dec.component_of[v]);
    }
}

TEST_CASE("bfs radius") {
    CHECK(bfs_radius(star(5), 0, VertexSet::all(6)) == 1);
    CHECK(bfs_radius(path(5), 0, VertexSet::all(5)) == 4);
    CHECK_FALSE(bfs_radius(path(5), 0, VertexSet(5, {0, 1, 3, 4})).has_value());
    CHECK_THROWS(bfs_radius(path(5), 2, VertexSet(5, {0, 1})));
}

TEST_CASE("degeneracy") {
    CHECK(degeneracy(random_tree(30, 5)) == 1);
    CHECK(degeneracy(complete(5)) == 4);
    const Graph chorded = Graph::build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 3}});
    CHECK(degeneracy(chorded) == 2);
    for (std::uint32_t seed = 0; seed < 20; ++seed) {
        const Graph g = oracle::random_connected(15, 0.3, seed);
        CHECK(g.density() <= Rational(degeneracy(g)));
    }
}

TEST_CASE("edge-list round trip") {
    for (std::uint32_t seed = 0; seed < 10; ++seed) {
        const Graph g = oracle::random_connected(12 + static_cast<int>(seed), 0.25, seed);
        CHECK(parse_edge_list(to_edge_list(g)) == g);
    }
    const Graph g = parse_edge_list("# a comment\np 3 2\n\ne 0 1\n# another\ne 1 2\n");
    CHECK(g == path(3));
    CHECK_THROWS(parse_edge_list("p 3 2\ne 0 1\n"));
    CHECK_THROWS(parse_edge_list("p 3 1\ne 0 5\n"));
}
