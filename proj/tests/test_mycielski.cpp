#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>
#include <random>

#include "doctest.h"
#include "myclab/graph.hpp"
#include "myclab/l21.hpp"
#include "myclab/mycielski.hpp"
#include "myclab/serialize.hpp"
#include "oracles.hpp"

using namespace myclab;

TEST_CASE("vertex id formatting") {
    MycVertexId base{MycVertexId::Kind::base, 3, 1};
    MycVertexId root{MycVertexId::Kind::root, 2, 0};
    CHECK(to_string(base) == "v3^1");
    CHECK(to_string(root) == "u2,0");
    CHECK(parse_vertex_id("v3^1") == base);
    CHECK(parse_vertex_id("u2,0") == root);
    CHECK_THROWS_AS(parse_vertex_id("w1^2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_vertex_id("v1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_vertex_id("v^2"), std::invalid_argument);
}

TEST_CASE("single-step construction") {
    MycGraph m = mycielski(path_graph(4));
    CHECK(m.graph.order() == 9);
    CHECK(m.base_order == 4);
    // the stored Figure 1 labeling validates on it
    std::ifstream in(std::string(FIXTURES_DIR) + "/fig1.json");
    REQUIRE(in.good());
    Labeling f = labeling_from_fixture(m, json::parse(in));
    CHECK(validate(m.graph, f).valid);
    CHECK(f.span() == 6);

    // M of the empty graph is a star plus isolated vertices
    MycGraph e = mycielski(empty_graph(4));
    Graph expected = combine(star_graph(4), empty_graph(4), CombineMode::disjoint_union);
    CHECK(are_isomorphic(e.graph, expected));

    // M(K_2) is the 5-cycle
    MycGraph k2 = mycielski(complete_graph(2));
    CHECK(k2.graph.order() == 5);
    for (int v = 0; v < 5; ++v) CHECK(k2.graph.degree(v) == 2);
    CHECK(are_isomorphic(k2.graph, cycle_graph(5)));
}

TEST_CASE("iterated construction") {
    CHECK(iterated_order(2, 2) == 11);
    CHECK(iterated_mycielski(complete_graph(2), 2).graph.order() == 11);
    Graph g = path_graph(4);
    CHECK(iterated_mycielski(g, 0).graph == g);
    CHECK(iterated_mycielski(g, 2).graph == mycielski(mycielski(g).graph).graph);
    CHECK_THROWS_AS(iterated_mycielski(complete_graph(10), 20), std::invalid_argument);
}

TEST_CASE("vertex naming matches the copy recursion") {
    MycGraph m = iterated_mycielski(path_graph(3), 2);
    CHECK(m.graph.order() == 15);
    // 4 copies of each of 3 base vertices, plus roots u1,0 u1,1 u2,0
    for (int i = 1; i <= 3; ++i)
        for (int k = 0; k <= 3; ++k) CHECK_NOTHROW(m.base(i, k));
    CHECK_NOTHROW(m.root(1, 0));
    CHECK_NOTHROW(m.root(1, 1));
    CHECK_NOTHROW(m.root(2, 0));
    CHECK_THROWS_AS(m.root(3, 0), std::out_of_range);
    // the level-2 root is adjacent to exactly the k >= 2 copies and u1,1
    CHECK(m.graph.degree(m.root(2, 0)) == 7);
    for (int i = 1; i <= 3; ++i) {
        CHECK(m.graph.adjacent(m.root(2, 0), m.base(i, 2)));
        CHECK(m.graph.adjacent(m.root(2, 0), m.base(i, 3)));
        CHECK_FALSE(m.graph.adjacent(m.root(2, 0), m.base(i, 0)));
    }
    CHECK(m.graph.adjacent(m.root(2, 0), m.root(1, 1)));
}

TEST_CASE("structural profile closed forms") {
    StructuralProfile a = structural_profile(4, 2, 3, false, 2);
    CHECK(a.order == 19);
    CHECK(a.max_degree == 9);
    CHECK(a.diameter == 3);

    StructuralProfile b = structural_profile(2, 1, 1, false, 1);
    CHECK(b.order == 5);
    CHECK(b.max_degree == 2);
    CHECK(b.diameter == 2);

    StructuralProfile c = structural_profile(5, 4, 2, false, 3);
    CHECK(c.order == 47);
    CHECK(c.max_degree == 32);
    CHECK(c.diameter == 2);
    // measured on the construction itself
    MycGraph m = iterated_mycielski(star_graph(4), 3);
    CHECK(m.graph.order() == 47);
    CHECK(m.graph.max_degree() == 32);
    auto ecc = diameter_and_eccentricities(m.graph);
    CHECK(ecc.diameter == 2);
}

TEST_CASE("structural predictions hold on random graphs") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + trial % 5;
        Graph g = oracles::random_graph(n, 0.4, rng);
        for (int t = 1; t <= 2; ++t) {
            MycGraph m = iterated_mycielski(g, t);
            auto bad = structural_discrepancy(g, m);
            CHECK_MESSAGE(!bad, bad.value_or(""));
        }
    }
}
