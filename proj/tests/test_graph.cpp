#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lightsout/enumeration.hpp"
#include "lightsout/graph.hpp"
#include "test_util.hpp"

using namespace lightsout;

TEST_CASE("from_edge_list") {
    Graph c4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(c4 == testutil::cycle(4));

    CHECK(Graph::from_edge_list(0, {}).order() == 0);

    Graph dup = Graph::from_edge_list(3, {{0, 1}, {0, 1}, {1, 0}});
    CHECK(dup.edge_count() == 1);

    CHECK_THROWS(Graph::from_edge_list(3, {{1, 1}}));
    CHECK_THROWS(Graph::from_edge_list(3, {{0, 3}}));
}

TEST_CASE("degree sum equals twice the edge count") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        Graph g = enumeration::graph_from_index(6, rng() % enumeration::graph_count(6));
        std::size_t total = 0;
        for (std::size_t v = 0; v < g.order(); ++v) total += g.degree(v);
        CHECK(total == 2 * g.edge_count());
    }
}

TEST_CASE("graph6 frozen encodings") {
    CHECK(to_graph6(testutil::complete(4)) == "C~");
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(parse_graph6("C~") == testutil::complete(4));
    CHECK(parse_graph6("@") == Graph(1));
    CHECK(parse_graph6(to_graph6(testutil::cycle(4))) == testutil::cycle(4));
}

TEST_CASE("graph6 matches the reference byte layout and round trips") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 200; ++t) {
        std::size_t n = rng() % 7;
        Graph g = enumeration::graph_from_index(n, rng() % enumeration::graph_count(n));
        std::string enc = to_graph6(g);
        CHECK(enc == testutil::graph6_reference(g));
        CHECK(parse_graph6(enc) == g);
        CHECK(to_graph6(parse_graph6(enc)) == enc);
    }
    // a larger graph crossing several payload bytes
    Graph big = testutil::cycle(20);
    CHECK(parse_graph6(to_graph6(big)) == big);
    CHECK(to_graph6(big) == testutil::graph6_reference(big));
}

TEST_CASE("graph6 error handling") {
    CHECK_THROWS(parse_graph6(""));
    CHECK_THROWS(parse_graph6("C~~"));          // oversized payload
    CHECK_THROWS(parse_graph6("C"));            // truncated payload
    CHECK_THROWS(parse_graph6(std::string("C") + '\x05'));  // malformed character
}

TEST_CASE("json edge-list round trip") {
    Graph g = testutil::cycle(5);
    CHECK(parse_json_graph(to_json_graph(g)) == g);
    CHECK(parse_json_graph(R"({"n":3,"edges":[[0,1]]})") ==
          Graph::from_edge_list(3, {{0, 1}}));
}

TEST_CASE("is_even") {
    CHECK(is_even(testutil::cycle(4)));
    CHECK_FALSE(is_even(testutil::complete(2)));
    CHECK(is_even(Graph(5)));
    CHECK(is_even(Graph(0)));
}

TEST_CASE("induced_subgraph") {
    CHECK(induced_subgraph(testutil::cycle(4), {0, 1, 2}) == testutil::path(3));
    Graph g = testutil::complete(4);
    CHECK(induced_subgraph(g, {0, 1, 2, 3}) == g);
    CHECK(induced_subgraph(g, {0, 2}) == testutil::complete(2));

    // restriction composes
    Graph two_step = induced_subgraph(induced_subgraph(testutil::cycle(6), {0, 1, 2, 3, 4}),
                                      {0, 1, 2});
    CHECK(two_step == induced_subgraph(testutil::cycle(6), {0, 1, 2}));
}

TEST_CASE("cut_vertices") {
    // bowtie: triangles 0,1,2 and 2,3,4 sharing vertex 2
    Graph bowtie = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    CHECK(cut_vertices(bowtie) == std::vector<std::size_t>{2});
    CHECK(cut_vertices(testutil::cycle(5)).empty());
    CHECK(cut_vertices(testutil::path(3)) == std::vector<std::size_t>{1});
    CHECK(cut_vertices(Graph(4)).empty());
}

TEST_CASE("find_cycle_div3 small cases") {
    auto c6 = find_cycle_div3(testutil::cycle(6));
    REQUIRE(c6.verdict == CycleWitness::Verdict::Found);
    CHECK(c6.cycle.size() == 6);
    CHECK(c6.cycle.size() % 3 == 0);
    // the witness really is a cycle of the graph
    for (std::size_t i = 0; i < c6.cycle.size(); ++i)
        CHECK(testutil::cycle(6).adjacent(c6.cycle[i], c6.cycle[(i + 1) % c6.cycle.size()]));

    CHECK(find_cycle_div3(testutil::cycle(4)).verdict == CycleWitness::Verdict::NotFound);
    CHECK(find_cycle_div3(testutil::complete(6), 1).verdict ==
          CycleWitness::Verdict::BudgetExceeded);
    CHECK_THROWS(find_cycle_div3(testutil::cycle(3), 0));
}

TEST_CASE("find_cycle_div3 agrees with brute-force cycle enumeration") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 300; ++t) {
        std::size_t n = rng() % 9;
        Graph g = enumeration::graph_from_index(n, rng() % enumeration::graph_count(n));
        auto w = find_cycle_div3(g);
        REQUIRE(w.verdict != CycleWitness::Verdict::BudgetExceeded);
        CHECK((w.verdict == CycleWitness::Verdict::Found) == testutil::brute_has_cycle_div3(g));
    }
}

TEST_CASE("orders above 64 are rejected") {
    CHECK_THROWS(Graph(65));
}
