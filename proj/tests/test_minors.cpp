#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "sepminor/generators.hpp"
#include "sepminor/minors.hpp"

#include <algorithm>

using namespace sepminor;

namespace {

MinorWitness k3_in_c6() {
    MinorWitness w;
    w.depth = 1;
    w.target = complete(3);
    w.branch_sets = {{0, 1}, {2, 3}, {4, 5}};
    w.centers = {0, 2, 4};
    // target edges (0,1), (0,2), (1,2)
    w.cross_edges = {{1, 2}, {0, 5}, {3, 4}};
    return w;
}

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph::build(a + b, e);
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d;
    for (Vertex v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

TEST_CASE("witness verification") {
    const Graph c6 = cycle(6);
    CHECK(verify_minor_witness(c6, identity_witness(c6)).ok);
    CHECK(contract_witness(c6, identity_witness(c6)) == c6);

    const auto w = k3_in_c6();
    CHECK(verify_minor_witness(c6, w).ok);
    CHECK(oracle::witness_valid(c6, w));
    CHECK(contract_witness(c6, w) == complete(3));
    CHECK(contract_witness(c6, w).density() == Rational(1));

    auto shared = w;
    shared.branch_sets[1] = {1, 2, 3};
    CHECK(verify_minor_witness(c6, shared).violation == "disjointness");

    auto shallow = w;
    shallow.depth = 0;
    CHECK(verify_minor_witness(c6, shallow).violation == "radius");

    auto split = w;
    split.branch_sets[0] = {0, 2};
    split.branch_sets[1] = {1, 3};
    split.centers = {0, 1, 4};
    CHECK(verify_minor_witness(c6, split).violation == "connectivity");

    auto missing = w;
    missing.cross_edges[0] = {1, 3};
    CHECK(verify_minor_witness(c6, missing).violation == "cross-edge");

    auto off = w;
    off.centers[2] = 0;
    CHECK(verify_minor_witness(c6, off).violation == "center");

    auto bad_range = w;
    bad_range.branch_sets[2] = {4, 9};
    CHECK(verify_minor_witness(c6, bad_range).violation == "range");

    CHECK_THROWS_AS(contract_witness(c6, shared), std::invalid_argument);
}

TEST_CASE("deeper witnesses stay valid") {
    auto w = k3_in_c6();
    for (int r = 1; r <= 4; ++r) {
        w.depth = r;
        CHECK(verify_minor_witness(cycle(6), w).ok);
    }
}

TEST_CASE("witness json round trip") {
    const auto w = slab_bipartite_witness(2, 2);
    const auto back = witness_from_json(witness_to_json(w));
    CHECK(back.target == w.target);
    CHECK(back.branch_sets == w.branch_sets);
    CHECK(back.centers == w.centers);
    CHECK(back.cross_edges == w.cross_edges);
    CHECK(back.depth == 2);
}

TEST_CASE("densest subgraph") {
    std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}};
    const auto k4p = densest_subgraph(Graph::build(5, e));
    CHECK(k4p.density == Rational(3, 2));
    CHECK(k4p.vertices == std::vector<Vertex>{0, 1, 2, 3});

    const Graph tree = random_tree(17, 2);
    CHECK(densest_subgraph(tree).density == Rational(16, 17));

    const Graph triangles = Graph::build(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
    CHECK(densest_subgraph(triangles).density == Rational(7, 6));
    CHECK(densest_subgraph_exhaustive(triangles).density == Rational(7, 6));
}

TEST_CASE("flow and exhaustive densest subgraph agree") {
    for (std::uint32_t seed = 0; seed < 80; ++seed) {
        const int n = 1 + static_cast<int>(seed % 12);
        const Graph g = oracle::random_connected(n, 0.1 + 0.05 * (seed % 8), seed);
        const auto flow = densest_subgraph(g);
        CHECK(flow.density == densest_subgraph_exhaustive(g).density);
        CHECK(flow.density == oracle::densest_density(g));
        CHECK(g.induced(flow.vertices).density() == flow.density);
    }
}

TEST_CASE("greedy lower bound") {
    for (std::uint32_t seed = 0; seed < 10; ++seed) {
        const Graph g = oracle::random_connected(14, 0.25, seed);
        const auto r0 = nabla_lower_greedy(g, 0, seed);
        CHECK(r0.lower == densest_subgraph(g).density);
        Rational prev(0);
        for (int r = 0; r <= 3; ++r) {
            const auto rep = nabla_lower_greedy(g, r, seed);
            CHECK(oracle::witness_valid(g, rep.witness));
            CHECK(rep.witness.target.density() == rep.lower);
            CHECK(prev <= rep.lower);
            prev = rep.lower;
        }
    }
    const Graph tree = random_tree(40, 8);
    for (int r = 0; r <= 3; ++r) CHECK(nabla_lower_greedy(tree, r, 1).lower < Rational(1));
    CHECK(nabla_lower_greedy(king_grid(4, 2), 2, 1).lower >= Rational(1));
    const auto a = nabla_lower_greedy(king_grid(9, 2), 3, 5);
    const auto b = nabla_lower_greedy(king_grid(9, 2), 3, 5);
    CHECK(a.lower == b.lower);
    CHECK(a.witness.branch_sets == b.witness.branch_sets);
}

TEST_CASE("slab witnesses") {
    const auto w1 = slab_bipartite_witness(2, 1);
    CHECK(verify_minor_witness(king_grid(2, 2), w1).ok);
    CHECK(w1.target == complete_bipartite(1, 2));

    const auto w2 = slab_bipartite_witness(2, 2);
    CHECK(verify_minor_witness(king_grid(4, 2), w2).ok);
    CHECK(w2.target == complete_bipartite(2, 4));
    CHECK(w2.target.density() == Rational(8, 6));

    for (int r = 1; r <= 5; ++r) {
        const auto w = slab_bipartite_witness(2, r);
        const Graph host = king_grid(2 * r, 2);
        CHECK(oracle::witness_valid(host, w));
        CHECK(w.target == complete_bipartite(r, 2 * r));
        const Graph contracted = contract_witness(host, w);
        CHECK(degree_sequence(contracted) == degree_sequence(w.target));
        CHECK(Rational(2 * r, 3) <= w.target.density());
    }
    const auto w4 = slab_bipartite_witness(4, 1);
    CHECK(w4.target == complete_bipartite(2, 4));
    CHECK(verify_minor_witness(king_grid(2, 4), w4).ok);
    CHECK_THROWS(slab_bipartite_witness(3, 1));
    CHECK_THROWS(slab_bipartite_witness(2, 40, 1000));
}

TEST_CASE("clique witnesses in subdivided cliques") {
    const auto w4 = clique_witness_in_subdivided_clique(4, Rational(1, 2), 4);
    const auto h4 = subdivide_eps(complete(4), Rational(1, 2));
    CHECK(h4.per_edge == 4);
    CHECK(verify_minor_witness(h4.graph, w4).ok);
    CHECK(contract_witness(h4.graph, w4) == complete(4));

    const auto w9 = clique_witness_in_subdivided_clique(9, Rational(1, 2), 9);
    const auto h9 = subdivide_eps(complete(9), Rational(1, 2));
    CHECK(oracle::witness_valid(h9.graph, w9));
    CHECK(contract_witness(h9.graph, w9).density() == Rational(4));

    const auto w2 = clique_witness_in_subdivided_clique(2, Rational(1, 3), 1);
    CHECK(w2.target == complete(2));

    CHECK(subdivided_clique_radius(9, Rational(1, 2)) == 5);
    CHECK_THROWS(clique_witness_in_subdivided_clique(9, Rational(1, 2), 4));
}

TEST_CASE("subdivision extraction") {
    const Graph c6 = cycle(6);
    const auto emb = extract_subdivision(c6, k3_in_c6());
    CHECK(verify_subdivision(c6, complete(3), emb, 4));
    int total = 0;
    for (int s : emb.subdivisions) total += s;
    CHECK(total == 3);

    const Graph p4 = path(4);
    const auto flat = extract_subdivision(p4, identity_witness(p4));
    CHECK(verify_subdivision(p4, p4, flat, 0));

    const auto slab = slab_bipartite_witness(2, 2);
    const std::vector<Vertex> keep{0, 1, 2, 3, 4};
    const auto k23 = restrict_witness(slab, keep);
    CHECK(k23.target == complete_bipartite(2, 3));
    const Graph host = king_grid(4, 2);
    const auto sub = extract_subdivision(host, k23);
    CHECK(verify_subdivision(host, k23.target, sub, 8));
    for (int s : sub.subdivisions) CHECK(s <= 8);

    CHECK_THROWS(extract_subdivision(host, slab));  // K_{2,4} is not subcubic
}

TEST_CASE("degree bounds") {
    CHECK(grid_minor_degree_bound(2, 1).value == 85);
    CHECK(grid_minor_degree_bound(2, 0).value == 25);
    CHECK_FALSE(grid_minor_degree_bound(2, 3).extrapolated);
    const auto odd = grid_minor_degree_bound(1, 1);
    CHECK(odd.extrapolated);
    CHECK(odd.value == 9);  // floor(sqrt(85))
    CHECK(subdivided_cubic_degree_bound(16) == 6);
    CHECK(subdivided_cubic_degree_bound(4) == 4);
    CHECK(nabla_upper_degenerate(2, 9) == Rational(2));
    CHECK_FALSE(nabla_upper_degenerate(3, 12).has_value());
}

TEST_CASE("shallow minors of sparsely subdivided graphs are 2-degenerate") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const auto host = subdivide_eps(random_regular(12, 3, seed), Rational(1, 2));
        REQUIRE(host.per_edge == 12);
        for (int r = 0; r <= 2; ++r) {
            const auto rep = nabla_lower_greedy(host.graph, r, seed);
            CHECK(degeneracy(contract_witness(host.graph, rep.witness)) <= 2);
            CHECK(rep.lower <= Rational(2));
        }
    }
}
