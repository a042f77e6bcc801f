#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "lightsout/bijection.hpp"
#include "lightsout/enumeration.hpp"
#include "lightsout/lightsout.hpp"
#include "test_util.hpp"

using namespace lightsout;
using namespace lightsout::bijection;
using gf2::BitMatrix;

namespace {

std::string key(const BitMatrix& m) {
    std::string s;
    for (std::size_t r = 0; r < m.rows(); ++r) s += m.row(r).to_string();
    return s;
}

std::string g6(const Graph& g) { return to_graph6(g); }

}  // namespace

TEST_CASE("count_sym_invertible frozen values") {
    CHECK(count_sym_invertible(0) == 1);
    CHECK(count_sym_invertible(1) == 1);
    CHECK(count_sym_invertible(2) == 4);
    CHECK(count_sym_invertible(3) == 28);
    CHECK(count_sym_invertible(4) == 448);
    CHECK(count_sym_invertible(5) == 13888);
    CHECK(count_sym_invertible(6) == 888832);
}

TEST_CASE("count_sym_invertible matches brute force for n <= 4") {
    for (std::size_t n = 0; n <= 4; ++n) {
        const std::size_t bits = n * (n + 1) / 2;
        MatchCount brute = 0;
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
            BitMatrix m(n, n);
            std::size_t b = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) {
                    bool bit = (code >> b++) & 1u;
                    m.set(i, j, bit);
                    m.set(j, i, bit);
                }
            if (gf2::det2(m)) ++brute;
        }
        CHECK(count_sym_invertible(n) == brute);
    }
}

TEST_CASE("count_extremal equals |S^(n-2)| and the brute scan") {
    CHECK_THROWS(count_extremal(0));
    CHECK_THROWS(count_extremal(1));
    CHECK(count_extremal(2) == 1);
    CHECK(count_extremal(3) == 1);
    CHECK(count_extremal(4) == 4);
    CHECK(count_extremal(5) == 28);
    for (std::size_t n = 2; n <= 7; ++n)
        CHECK(count_extremal(n) == enumeration::count_extremal_brute(n));
}

TEST_CASE("extremal_fraction") {
    CHECK(extremal_fraction(2) == Rational(1));
    CHECK(extremal_fraction(3) == Rational(1, 2));
    CHECK(extremal_fraction(4) == Rational(1, 2));
    CHECK(extremal_fraction(5) == Rational(7, 16));

    // partial products of (1 - 2^(1-2i))
    Rational expect(1);
    for (std::size_t i = 1; 2 * i <= 19; ++i)
        expect *= Rational((std::int64_t{1} << (2 * i - 1)) - 1,
                           std::int64_t{1} << (2 * i - 1));
    CHECK(extremal_fraction(20) == expect);

    double f = extremal_fraction(20).convert_to<double>();
    CHECK(f > 0.418);
    CHECK(f < 0.420);
}

TEST_CASE("graph_to_extremal_matrix validates") {
    auto em = graph_to_extremal_matrix(testutil::cycle(4));
    CHECK(em.m == closed_neighborhood_matrix(testutil::cycle(4)));
    CHECK(extremal_matrix_to_graph(em) == testutil::cycle(4));
    CHECK_THROWS(graph_to_extremal_matrix(testutil::complete(3)));
    CHECK_THROWS(graph_to_extremal_matrix(testutil::cycle(6)));
}

TEST_CASE("wrapper invariants are enforced") {
    BitMatrix j2(2, 2);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) j2.set(r, c, true);
    CHECK_THROWS(ExtremalMatrix(j2));  // singular
    BitMatrix offdiag = BitMatrix::identity(3);
    offdiag.set(0, 0, false);
    CHECK_THROWS(ExtremalMatrix(offdiag));  // diagonal entry missing
    BitMatrix bad(2, 2);
    bad.set(0, 1, true);
    bad.set(1, 0, true);  // symmetric invertible, but B*1 != diag(B)
    CHECK_THROWS(BMatrix(bad));
    CHECK_THROWS(SymInvertible(BitMatrix(2, 2)));
}

TEST_CASE("phi1 and phi2 on the identity chain") {
    // empty graph on 3 vertices: M = I_3
    ExtremalMatrix e3 = graph_to_extremal_matrix(Graph(3));
    BMatrix b2 = phi1(e3);
    CHECK(b2.b == BitMatrix::identity(2));
    SymInvertible s1 = phi2(b2);
    CHECK(s1.x == BitMatrix::identity(1));

    // the unique extremal graph on 2 vertices maps to the 0x0 matrix
    BMatrix b1 = phi1(graph_to_extremal_matrix(Graph(2)));
    CHECK(b1.b == BitMatrix::identity(1));
    SymInvertible s0 = phi2(b1);
    CHECK(s0.x.rows() == 0);
    CHECK(phi2_inv(s0).b == BitMatrix::identity(1));
}

TEST_CASE("phi round trips are exact on every extremal graph, n <= 6") {
    for (std::size_t n = 2; n <= 6; ++n) {
        std::set<std::string> images;
        std::size_t extremal_seen = 0;
        enumeration::for_each_even_graph(n, [&](const Graph& g) {
            if (!is_extremal(g).extremal) return;
            ++extremal_seen;
            ExtremalMatrix m = graph_to_extremal_matrix(g);
            BMatrix b = phi1(m);
            SymInvertible x = phi2(b);
            images.insert(key(x.x));
            CHECK(phi2_inv(x).b == b.b);
            CHECK(phi1_inv(b).m == m.m);
            CHECK(extremal_matrix_to_graph(phi1_inv(phi2_inv(x))) == g);
        });
        // injective onto all of S^(n-2): image count equals the census
        CHECK(MatchCount(images.size()) == count_extremal(n));
        CHECK(MatchCount(extremal_seen) == count_extremal(n));
    }
}

TEST_CASE("phi inverse round trips from random S^n, larger sizes") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 200; ++t) {
        std::size_t n = rng() % 15;
        SymInvertible x(gf2::random_symmetric_invertible(n, rng));
        BMatrix b = phi2_inv(x);
        ExtremalMatrix m = phi1_inv(b);
        CHECK(phi2(b).x == x.x);
        CHECK(phi1(m).b == b.b);
        Graph g = extremal_matrix_to_graph(m);
        CHECK(is_extremal(g).extremal);
    }
}

TEST_CASE("sample_extremal") {
    std::mt19937_64 rng(7);
    CHECK_THROWS(sample_extremal(1, rng));

    // n = 3: the empty graph is the only extremal graph
    for (int t = 0; t < 10; ++t) {
        Graph g = sample_extremal(3, rng);
        CHECK(g.order() == 3);
        CHECK(g.edges().empty());
    }

    for (std::size_t n : {8, 12}) {
        Graph g = sample_extremal(n, rng);
        CHECK(g.order() == n);
        CHECK(is_extremal(g).extremal);
    }
}

TEST_CASE("sample_extremal is uniform on the 4 extremal graphs of order 4") {
    std::set<std::string> universe;
    enumeration::for_each_even_graph(4, [&](const Graph& g) {
        if (is_extremal(g).extremal) universe.insert(g6(g));
    });
    REQUIRE(universe.size() == 4);

    std::mt19937_64 rng(9);
    std::map<std::string, int> freq;
    const int draws = 4000;
    for (int t = 0; t < draws; ++t) freq[g6(sample_extremal(4, rng))]++;
    CHECK(freq.size() == 4);
    for (const auto& [k, c] : freq) {
        CHECK(universe.count(k) == 1);
        CHECK(c > draws / 4 - 200);
        CHECK(c < draws / 4 + 200);
    }
}
