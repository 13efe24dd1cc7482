#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "myclab/graph.hpp"
#include "myclab/matching.hpp"
#include "myclab/mycielski.hpp"
#include "oracles.hpp"

using namespace myclab;

TEST_CASE("bipartite maximum matching") {
    CHECK(max_bipartite_matching(double_cover(cycle_graph(3))).edges.size() == 3);
    CHECK(max_bipartite_matching(double_cover(star_graph(3))).edges.size() == 2);
    CHECK(max_bipartite_matching(BipartiteGraph(3, 3)).edges.size() == 0);

    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = oracles::random_graph(6, 0.4, rng);
        BipartiteGraph b = double_cover(g);
        CHECK(static_cast<int>(max_bipartite_matching(b).edges.size()) == oracles::matching_oracle(b));
    }
}

TEST_CASE("nu2 values from the reduction proofs") {
    CHECK(nu2(complement(power(path_graph(4), 2))) == 2);
    CHECK(nu2(complement(power(path_graph(5), 2))) == 4);
    CHECK(nu2(cycle_graph(5)) == 5);
}

TEST_CASE("nu2 against the weight-assignment oracle") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : all_graphs(n, false)) CHECK(nu2(g) == oracles::nu2_weight_oracle(g));
}

TEST_CASE("perfect 2-matching certificates and refutations") {
    TwoMatchingResult k2 = perfect_two_matching(complete_graph(2));
    REQUIRE(k2.certificate.has_value());
    CHECK(k2.certificate->edge_components.size() == 1);
    CHECK(k2.certificate->cycle_components.empty());

    TwoMatchingResult star = perfect_two_matching(star_graph(3));
    CHECK_FALSE(star.certificate.has_value());
    // violator: independent S with |N(S)| < |S|
    REQUIRE(star.violator.size() >= 2);
    std::set<int> nbrs;
    for (int a : star.violator)
        for (int b : star.violator) CHECK_FALSE(star_graph(3).adjacent(a, b));
    for (int a : star.violator)
        for (int u : star_graph(3).neighbors(a)) nbrs.insert(u);
    CHECK(nbrs.size() < star.violator.size());

    // unique perfect 2-matching of the P6 squared-complement
    Graph h = complement(power(path_graph(6), 2));
    TwoMatchingResult p6 = perfect_two_matching(h);
    REQUIRE(p6.certificate.has_value());
    CHECK_NOTHROW(check_certificate(h, *p6.certificate));
    CHECK(p6.certificate->covered() == 6);
    std::set<std::pair<int, int>> edges(p6.certificate->edge_components.begin(),
                                        p6.certificate->edge_components.end());
    CHECK(edges == std::set<std::pair<int, int>>{{0, 3}, {1, 4}, {2, 5}});
}

TEST_CASE("maximum 2-matching certificates cover nu2 vertices") {
    std::mt19937 rng(32);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = oracles::random_graph(2 + trial % 6, 0.4, rng);
        TwoMatchingCertificate cert = maximum_two_matching(g);
        CHECK_NOTHROW(check_certificate(g, cert));
        CHECK(cert.covered() == nu2(g));
    }
}

TEST_CASE("certificate checker rejects broken structures") {
    Graph c4 = cycle_graph(4);
    TwoMatchingCertificate non_edge;
    non_edge.edge_components = {{0, 2}};
    CHECK_THROWS_AS(check_certificate(c4, non_edge), std::invalid_argument);

    TwoMatchingCertificate even_cycle;
    even_cycle.cycle_components = {{0, 1, 2, 3}};
    CHECK_THROWS_AS(check_certificate(c4, even_cycle), std::invalid_argument);

    TwoMatchingCertificate overlap;
    overlap.edge_components = {{0, 1}, {1, 2}};
    CHECK_THROWS_AS(check_certificate(c4, overlap), std::invalid_argument);
}

TEST_CASE("star matchings") {
    CHECK(star_matching_number(complete_graph(2), 4).first == 2);
    CHECK(star_matching_number(star_graph(5), 4).first == 5);

    // q singleton parts in a complete multipartite graph leave i4 = q
    Graph g = complete_multipartite({2, 2, 1, 1, 1, 1, 1});
    CHECK(i4(complement(g)) == 5);

    auto [value, witness] = star_matching_number(star_graph(5), 4);
    int covered = 0;
    std::set<int> seen;
    for (const auto& s : witness.stars) {
        CHECK(s.leaves.size() >= 1);
        CHECK(s.leaves.size() <= 4);
        seen.insert(s.center);
        covered += 1 + static_cast<int>(s.leaves.size());
        for (int l : s.leaves) {
            CHECK(star_graph(5).adjacent(s.center, l));
            seen.insert(l);
        }
    }
    CHECK(covered == value);
    CHECK(static_cast<int>(seen.size()) == covered);
}

TEST_CASE("star matching number against the mask DP oracle") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : all_graphs(n, false)) {
            CHECK(star_matching_number(g, 4).first == oracles::star_matching_oracle(g, 4));
            CHECK(star_matching_number(g, 2).first == oracles::star_matching_oracle(g, 2));
        }
}

TEST_CASE("perfect star matching condition") {
    CHECK(perfect_star_matching_condition(complete_graph(2), 4).holds);
    ConditionResult bad = perfect_star_matching_condition(star_graph(5), 4);
    CHECK_FALSE(bad.holds);
    CHECK(bad.violating.size() == 5);

    // any graph with a perfect matching satisfies the m=4 condition
    CHECK(perfect_star_matching_condition(cycle_graph(6), 4).holds);
    CHECK(perfect_star_matching_condition(path_graph(8), 4).holds);
}

TEST_CASE("path cover number") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(path_cover_number(empty_graph(n)) == n);
        CHECK(path_cover_number(path_graph(n)) == 1);
    }
    CHECK(path_cover_number(complement(mycielski(complete_graph(7)).graph)) == 3);

    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : all_graphs(n, false)) CHECK(path_cover_number(g) == oracles::path_cover_oracle(g));
}

TEST_CASE("the D2 neighborhood condition") {
    CHECK(d2_condition(path_graph(6)).holds);
    CHECK(d2_condition(cycle_graph(6)).holds);
    for (int n = 2; n <= 6; ++n) {
        ConditionResult r = d2_condition(complete_graph(n));
        CHECK_FALSE(r.holds);
        CHECK_FALSE(r.violating.empty());
    }

    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : all_graphs(n, false)) CHECK(d2_condition(g).holds == oracles::d2_oracle(g));
}
