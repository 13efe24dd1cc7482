#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>
#include <random>

#include "doctest.h"
#include "myclab/graph.hpp"
#include "myclab/graph_io.hpp"
#include "myclab/l21.hpp"
#include "myclab/labelers.hpp"
#include "myclab/matching.hpp"
#include "myclab/mycielski.hpp"
#include "myclab/serialize.hpp"
#include "oracles.hpp"

using namespace myclab;

namespace {

json load_fixture(const std::string& name) {
    std::ifstream in(std::string(FIXTURES_DIR) + "/" + name);
    REQUIRE(in.good());
    return json::parse(in);
}

}  // namespace

TEST_CASE("upper shift lifting") {
    Graph p3 = path_graph(3);
    Labeling h = *lambda_exact(p3).witness;  // span 3
    MycLabeling ml = label_upper_shift(p3, h);
    CHECK(validate(ml.myc.graph, ml.labeling).valid);
    CHECK(ml.labeling.span() == 4 + h.span());

    Graph k2 = complete_graph(2);
    MycLabeling mk2 = label_upper_shift(k2, Labeling{{0, 2}});
    CHECK(validate(mk2.myc.graph, mk2.labeling).valid);
    CHECK(mk2.labeling.span() == 5);

    std::mt19937 rng(51);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = oracles::random_graph(2 + trial % 5, 0.4, rng);
        Labeling w = *lambda_exact(g).witness;
        MycLabeling lifted = label_upper_shift(g, w);
        CHECK(lifted.labeling.span() == g.order() + 1 + w.span());
    }
}

TEST_CASE("clique partitions") {
    // empty graph: one block holding everything
    auto cp_empty = find_clique_partition(empty_graph(5));
    REQUIRE(cp_empty.has_value());
    CHECK(cp_empty->blocks.size() == 1);
    CHECK(cp_empty->blocks[0].size() == 5);
    MycLabeling ml = label_clique_partition(empty_graph(5), *cp_empty);
    CHECK(validate(ml.myc.graph, ml.labeling).valid);
    CHECK(ml.labeling.span() == 6);

    // C9: three blocks of three, each {i, i+3, i+6}
    auto cp_c9 = find_clique_partition(cycle_graph(9));
    REQUIRE(cp_c9.has_value());
    CHECK(cp_c9->blocks.size() == 3);
    for (const auto& b : cp_c9->blocks) {
        REQUIRE(b.size() == 3);
        CHECK((b[1] - b[0]) % 3 == 0);
        CHECK((b[2] - b[1]) % 3 == 0);
    }
    MycLabeling mc9 = label_clique_partition(cycle_graph(9), *cp_c9);
    CHECK(validate(mc9.myc.graph, mc9.labeling).valid);
    CHECK(mc9.labeling.span() == 10);

    // C10: the singleton-tail case still reaches span n+1
    auto cp_c10 = find_clique_partition(cycle_graph(10));
    REQUIRE(cp_c10.has_value());
    MycLabeling mc10 = label_clique_partition(cycle_graph(10), *cp_c10);
    CHECK(validate(mc10.myc.graph, mc10.labeling).valid);
    CHECK(mc10.labeling.span() == 11);

    // P6 admits no partition into big squared-complement cliques
    CHECK_FALSE(find_clique_partition(path_graph(6)).has_value());

    // the checker rejects a block with close vertices
    CliquePartition bad;
    bad.blocks = {{0, 1, 2}, {3, 4, 5}};
    CHECK_THROWS_AS(check_clique_partition(path_graph(6), bad), std::invalid_argument);
}

TEST_CASE("path and cycle families achieve the optimal spans") {
    for (int n = 3; n <= 20; ++n) {
        MycLabeling ml = label_family(Family::path, n);
        CHECK(validate(ml.myc.graph, ml.labeling).valid);
        int want = n <= 4 ? 6 : n == 5 ? 7 : n + 1;
        CHECK(ml.labeling.span() == want);
    }
    for (int n = 3; n <= 20; ++n) {
        MycLabeling ml = label_family(Family::cycle, n);
        CHECK(validate(ml.myc.graph, ml.labeling).valid);
        int want = n == 3 ? 6 : n == 4 ? 8 : n == 5 ? 10 : n + 1;
        CHECK(ml.labeling.span() == want);
    }
}

TEST_CASE("figure fixtures validate at the published spans") {
    struct Fig {
        const char* file;
        int span;
    };
    const Fig figs[] = {{"fig1.json", 6}, {"fig2.json", 7}, {"fig3.json", 7}, {"fig4.json", 8}, {"fig5.json", 9}};
    for (const Fig& fig : figs) {
        json j = load_fixture(fig.file);
        Graph base = graph_from_json(j["graph"].dump());
        MycGraph m = iterated_mycielski(base, j["t"].get<int>());
        Labeling f = labeling_from_fixture(m, j);
        CHECK(validate(m.graph, f).valid);
        CHECK(f.span() == fig.span);
        CHECK(j["span"].get<int>() == fig.span);
    }
}

TEST_CASE("iterated complete labeling") {
    MycLabeling a = label_m2_complete(2, 2);
    CHECK(a.labeling.span() == 10);
    CHECK(a.myc.graph.order() == 11);
    std::vector<int> sorted = a.labeling.labels;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < 11; ++i) CHECK(sorted[i] == i);  // all labels distinct, consecutive

    MycLabeling b = label_m2_complete(3, 2);
    CHECK(b.labeling.span() == 14);
    CHECK(b.myc.graph.order() == 15);

    for (int n = 2; n <= 6; ++n)
        for (int t = 2; t <= 3; ++t) {
            MycLabeling ml = label_m2_complete(n, t);
            CHECK(validate(ml.myc.graph, ml.labeling).valid);
            CHECK(ml.labeling.span() == (1 << t) * (n + 1) - 2);
        }
}

TEST_CASE("diameter-3 two-step labeling") {
    MycLabeling p4 = label_m2_diam3(path_graph(4));
    CHECK(validate(p4.myc.graph, p4.labeling).valid);
    CHECK(p4.labeling.span() == 17);

    MycLabeling p6 = label_m2_diam3(path_graph(6));
    CHECK(p6.labeling.span() == 25);  // thm 4.7 gives 14, strictly better

    CHECK_THROWS_AS(label_m2_diam3(cycle_graph(4)), std::invalid_argument);
}

TEST_CASE("perfect 2-matching labeling") {
    Graph p6 = path_graph(6);
    TwoMatchingCertificate cert;
    cert.edge_components = {{0, 3}, {1, 4}, {2, 5}};
    MycLabeling ml = label_from_two_matching(p6, 2, cert);
    CHECK(validate(ml.myc.graph, ml.labeling).valid);
    CHECK(ml.labeling.span() == 14);

    auto c7res = perfect_two_matching(complement(power(cycle_graph(7), 2)));
    REQUIRE(c7res.certificate.has_value());
    MycLabeling c7 = label_from_two_matching(cycle_graph(7), 2, *c7res.certificate);
    CHECK(validate(c7.myc.graph, c7.labeling).valid);
    CHECK(c7.labeling.span() == 16);

    // the Figure 8 schema instance
    json j = load_fixture("fig8-schema.json");
    Graph c12 = graph_from_json(j["graph"].dump());
    MycGraph m = iterated_mycielski(c12, 2);
    Labeling f = labeling_from_fixture(m, j);
    CHECK(validate(m.graph, f).valid);
    CHECK(f.span() == 26);
}

TEST_CASE("partial 2-matching labeling") {
    MycLabeling p5 = label_partial_two_matching(path_graph(5), 2);
    CHECK(validate(p5.myc.graph, p5.labeling).valid);
    CHECK(p5.labeling.span() == 14);  // p = 4

    MycLabeling p4 = label_partial_two_matching(path_graph(4), 2);
    CHECK(p4.labeling.span() == 14);  // p = 2

    // p = n coincides with the perfect formula
    MycLabeling p6 = label_partial_two_matching(path_graph(6), 2);
    CHECK(p6.labeling.span() == 14);

    // valid on every small connected graph at t = 2 and t = 3
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : all_graphs(n, true))
            for (int t = 2; t <= 3; ++t) {
                MycLabeling ml = label_partial_two_matching(g, t);
                CHECK(validate(ml.myc.graph, ml.labeling).valid);
                long p = nu2(complement(power(g, 2)));
                CHECK(ml.labeling.span() == (1L << (t - 1)) * (2 * n - p + 2) - 2);
            }
}
