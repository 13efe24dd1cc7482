#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "myclab/graph.hpp"
#include "oracles.hpp"

using namespace myclab;

TEST_CASE("complement basics") {
    CHECK(complement(complete_graph(3)).edge_count() == 0);

    Graph p4 = path_graph(4);
    Graph c = complement(p4);
    CHECK(c.edge_count() == 3);
    CHECK(c.adjacent(0, 2));
    CHECK(c.adjacent(0, 3));
    CHECK(c.adjacent(1, 3));

    std::mt19937 rng(1);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = oracles::random_graph(7, 0.4, rng);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("graph power") {
    Graph p4 = path_graph(4);
    CHECK(power(p4, 1) == p4);
    Graph sq = power(p4, 2);
    CHECK(sq.edge_count() == 5);
    CHECK(sq.adjacent(0, 2));
    CHECK(sq.adjacent(1, 3));
    CHECK_FALSE(sq.adjacent(0, 3));

    // complement of C_6 squared pairs up antipodes
    Graph m = complement(power(cycle_graph(6), 2));
    CHECK(m.edge_count() == 3);
    for (int i = 0; i < 3; ++i) CHECK(m.adjacent(i, i + 3));

    // monotone, and complete per component once k reaches the diameter
    std::mt19937 rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = oracles::random_graph(6, 0.35, rng);
        Graph prev = g;
        for (int k = 2; k <= 6; ++k) {
            Graph cur = power(g, k);
            for (auto [u, v] : prev.edges()) CHECK(cur.adjacent(u, v));
            prev = cur;
        }
        DistanceTable d = distances(g);
        Graph full = power(g, 6);
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v) CHECK(full.adjacent(u, v) == d.reachable(u, v));
    }
}

TEST_CASE("double cover") {
    BipartiteGraph k2 = double_cover(complete_graph(2));
    CHECK(k2.left_size == 2);
    CHECK(k2.graph.edge_count() == 2);
    CHECK(k2.graph.adjacent(0, 3));
    CHECK(k2.graph.adjacent(1, 2));

    BipartiteGraph c3 = double_cover(cycle_graph(3));
    CHECK(c3.graph.order() == 6);
    CHECK(c3.graph.edge_count() == 6);
    CHECK(is_connected(c3.graph));
    CHECK(are_isomorphic(c3.graph, cycle_graph(6)));

    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = oracles::random_graph(7, 0.4, rng);
        CHECK(double_cover(g).graph.edge_count() == 2 * g.edge_count());
    }
}

TEST_CASE("distances against the matrix oracle") {
    CHECK(distances(path_graph(4)).at(0, 3) == 3);
    Graph k5 = complete_graph(5);
    DistanceTable dk = distances(k5);
    for (int u = 0; u < 5; ++u)
        for (int v = 0; v < 5; ++v) CHECK(dk.at(u, v) == (u == v ? 0 : 1));

    Graph two_edges(4);
    two_edges.add_edge(0, 1);
    two_edges.add_edge(2, 3);
    CHECK_FALSE(distances(two_edges).reachable(0, 2));

    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : all_graphs(n, false)) {
            DistanceTable want = oracles::distance_oracle(g);
            DistanceTable got = distances(g);
            CHECK(got.d == want.d);
        }
    std::mt19937 rng(4);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = oracles::random_graph(6, 0.3, rng);
        CHECK(distances(g).d == oracles::distance_oracle(g).d);
    }
}

TEST_CASE("eccentricity and diameter") {
    EccentricityReport star = diameter_and_eccentricities(star_graph(4));
    CHECK(star.eccentricity[0] == 1);
    for (int leaf = 1; leaf <= 4; ++leaf) CHECK(star.eccentricity[leaf] == 2);
    CHECK(star.diameter == 2);

    CHECK(diameter_and_eccentricities(complete_graph(5)).diameter == 1);
    CHECK(diameter_and_eccentricities(path_graph(6)).diameter == 5);
    CHECK_FALSE(diameter_and_eccentricities(empty_graph(2)).diameter.has_value());

    CHECK(eccentricity_two_count(cycle_graph(5)) == 5);
    CHECK(eccentricity_two_count(star_graph(4)) == 4);
}

TEST_CASE("combine: union and join") {
    Graph star = combine(complete_graph(1), empty_graph(5), CombineMode::join);
    CHECK(are_isomorphic(star, star_graph(5)));

    Graph g1 = path_graph(3), g2 = cycle_graph(4);
    CHECK(combine(g1, g2, CombineMode::disjoint_union).edge_count() == g1.edge_count() + g2.edge_count());
    CHECK(combine(g1, g2, CombineMode::join).edge_count() == g1.edge_count() + g2.edge_count() + 12);

    CHECK(complement(combine(g1, g2, CombineMode::join)) ==
          combine(complement(g1), complement(g2), CombineMode::disjoint_union));
}

TEST_CASE("named families") {
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(star_graph(4).order() == 5);
    CHECK(star_graph(4).degree(0) == 4);

    Graph g = complete_multipartite({2, 2, 1, 1, 1, 1, 1});
    Graph c = complement(g);
    CHECK(c.edge_count() == 2);
    CHECK(c.adjacent(0, 1));
    CHECK(c.adjacent(2, 3));
}

TEST_CASE("isomorphism-free enumeration") {
    CHECK(all_graphs(1, false).size() == 1);
    CHECK(all_graphs(3, true).size() == 2);
    CHECK(all_graphs(4, true).size() == 6);
    CHECK(all_graphs(5, false).size() == 34);

    // no two members share a canonical code
    auto graphs = all_graphs(5, false);
    for (size_t a = 0; a < graphs.size(); ++a)
        for (size_t b = a + 1; b < graphs.size(); ++b) CHECK_FALSE(are_isomorphic(graphs[a], graphs[b]));
}

TEST_CASE("clique number and connectivity") {
    CHECK(clique_number(complete_graph(6)) == 6);
    CHECK(clique_number(cycle_graph(5)) == 2);
    CHECK(clique_number(cycle_graph(3)) == 3);
    CHECK(is_connected(path_graph(7)));
    CHECK_FALSE(is_connected(empty_graph(2)));
}
