#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lightsout/enumeration.hpp"
#include "lightsout/matchings.hpp"
#include "lightsout/operations.hpp"
#include "test_util.hpp"

using namespace lightsout;

TEST_CASE("count_matchings small cases") {
    CHECK(count_matchings(Graph(0)) == 1);
    CHECK(count_matchings(Graph(5)) == 1);
    CHECK(count_matchings(testutil::cycle(3)) == 4);
    CHECK(count_matchings(testutil::cycle(4)) == 7);
    CHECK(count_matchings(testutil::cycle(6)) == 18);
    CHECK(count_matchings(testutil::complete(4)) == 10);
}

TEST_CASE("count_matchings equals brute-force edge-subset filtering") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 80; ++t) {
        std::size_t n = rng() % 7;
        Graph g = enumeration::graph_from_index(n, rng() % enumeration::graph_count(n));
        CHECK(count_matchings(g) == testutil::brute_matchings(g).size());
    }
}

TEST_CASE("cycle matchings satisfy m(C_n) = m(P_n) + m(P_n-2)") {
    for (std::size_t n = 3; n <= 12; ++n) {
        CHECK(count_matchings(testutil::cycle(n)) ==
              count_matchings(testutil::path(n)) + count_matchings(testutil::path(n - 2)));
    }
}

TEST_CASE("count_matchings handles a moderately large graph exactly") {
    // m(K_n) is the telephone number T(n); T(12) = 140152
    CHECK(count_matchings(testutil::complete(12)) == 140152);
}

TEST_CASE("count_matchings_covering") {
    for (std::size_t v = 0; v < 4; ++v)
        CHECK(count_matchings_covering(testutil::cycle(4), v) == 4);
    CHECK(count_matchings_covering(testutil::complete(2), 0) == 1);
    CHECK(count_matchings_covering(Graph(3), 1) == 0);
    CHECK_THROWS(count_matchings_covering(Graph(3), 3));

    // every vertex of an even graph is covered by an even number of matchings
    for (std::size_t n = 1; n <= 6; ++n) {
        enumeration::for_each_even_graph(n, [&](const Graph& g) {
            for (std::size_t v = 0; v < n; ++v)
                CHECK(count_matchings_covering(g, v) % 2 == 0);
        });
    }
}

TEST_CASE("count_matchings_size_covering") {
    CHECK(count_matchings_size_covering(testutil::cycle(4), 1, {0}) == 2);
    CHECK(count_matchings_size_covering(testutil::cycle(4), 2, {0}) == 2);
    CHECK(count_matchings_size_covering(testutil::cycle(4), 0, {}) == 1);
    CHECK(count_matchings_size_covering(testutil::cycle(4), 0, {2}) == 0);
    CHECK_THROWS(count_matchings_size_covering(testutil::cycle(4), 1, {9}));
}

TEST_CASE("count_matchings_size_covering equals brute force") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 60; ++t) {
        std::size_t n = 1 + rng() % 6;
        Graph g = enumeration::graph_from_index(n, rng() % enumeration::graph_count(n));
        std::vector<std::size_t> s;
        for (std::size_t v = 0; v < n; ++v)
            if (rng() % 3 == 0) s.push_back(v);
        auto edges = g.edges();
        auto matchings = testutil::brute_matchings(g);
        for (std::size_t k = 0; k <= n / 2 + 1; ++k) {
            std::size_t brute = 0;
            for (const auto& m : matchings) {
                if (m.size() != k) continue;
                std::uint64_t covered = 0;
                for (auto e : m)
                    covered |= (std::uint64_t{1} << edges[e].first) |
                               (std::uint64_t{1} << edges[e].second);
                bool covers = true;
                for (auto v : s)
                    if (!((covered >> v) & 1u)) covers = false;
                if (covers) ++brute;
            }
            CHECK(count_matchings_size_covering(g, k, s) == brute);
        }
    }
}

TEST_CASE("count_perfect_matchings") {
    CHECK(count_perfect_matchings(testutil::cycle(4), {0, 1, 2, 3}) == 2);
    CHECK(count_perfect_matchings(testutil::cycle(4), {0, 1, 2}) == 0);
    CHECK(count_perfect_matchings(testutil::complete(4), {0, 1, 2, 3}) == 3);
    CHECK(count_perfect_matchings(testutil::complete(4), {}) == 1);
}

TEST_CASE("total matchings decompose into perfect matchings of induced subgraphs") {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 1 + rng() % 6;
        Graph g = enumeration::graph_from_index(n, rng() % enumeration::graph_count(n));
        MatchCount total = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            std::vector<std::size_t> u;
            for (std::size_t v = 0; v < n; ++v)
                if ((mask >> v) & 1u) u.push_back(v);
            if (u.size() % 2 == 0) total += count_perfect_matchings(g, u);
        }
        CHECK(total == count_matchings(g));
    }
}

TEST_CASE("matching_parity equals m(G) mod 2 on every graph up to 6 vertices") {
    CHECK(matching_parity(testutil::cycle(3)) == false);
    CHECK(matching_parity(testutil::cycle(4)) == true);
    CHECK(matching_parity(testutil::cycle(5)) == true);
    for (std::size_t n = 0; n <= 6; ++n) {
        enumeration::for_each_graph(n, [&](const Graph& g) {
            CHECK(matching_parity(g) == (count_matchings(g) % 2 == 1));
        });
    }
}

TEST_CASE("verify_odd_set_theorem") {
    auto c4 = verify_odd_set_theorem(testutil::cycle(4));
    CHECK(c4.passed());
    CHECK(c4.checked == 8 * 3);  // 8 odd subsets, k in 0..2

    CHECK(verify_odd_set_theorem(testutil::cycle(6)).passed());

    auto k2 = verify_odd_set_theorem(testutil::complete(2));
    CHECK_FALSE(k2.hypothesis_even);
    CHECK(k2.checked == 0);
}

TEST_CASE("verify_odd_set_theorem agrees with the per-query counter") {
    for (const Graph& g : {testutil::cycle(4), testutil::cycle(6),
                           testutil::hexagon_with_triangle()}) {
        REQUIRE(verify_odd_set_theorem(g).passed());
        const std::size_t n = g.order();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            if (!(std::popcount(mask) & 1)) continue;
            std::vector<std::size_t> s;
            for (std::size_t v = 0; v < n; ++v)
                if ((mask >> v) & 1u) s.push_back(v);
            for (std::size_t k = 0; k <= n / 2; ++k)
                CHECK(count_matchings_size_covering(g, k, s) % 2 == 0);
        }
    }
}

TEST_CASE("cut-vertex matching identity on random 1-joins") {
    // for g = 1-join of g1, g2 at v:
    // m(g) = m(g2 - v) m(g1) + m(g1 - v) m(g2, v)
    std::mt19937_64 rng(8);
    for (int t = 0; t < 60; ++t) {
        std::size_t n1 = 1 + rng() % 6, n2 = 1 + rng() % 6;
        Graph g1 = enumeration::graph_from_index(n1, rng() % enumeration::graph_count(n1));
        Graph g2 = enumeration::graph_from_index(n2, rng() % enumeration::graph_count(n2));
        std::size_t x = rng() % n1, y = rng() % n2;
        Graph joined = ops::one_join(g1, x, g2, y);

        std::vector<std::size_t> g1_minus, g2_minus;
        for (std::size_t v = 0; v < n1; ++v)
            if (v != x) g1_minus.push_back(v);
        for (std::size_t v = 0; v < n2; ++v)
            if (v != y) g2_minus.push_back(v);

        MatchCount expected =
            count_matchings(induced_subgraph(g2, g2_minus)) * count_matchings(g1) +
            count_matchings(induced_subgraph(g1, g1_minus)) * count_matchings_covering(g2, y);
        CHECK(count_matchings(joined) == expected);
    }
}
