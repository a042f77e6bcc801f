#ifndef LIGHTSOUT_BIJECTION_HPP
#define LIGHTSOUT_BIJECTION_HPP

#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "lightsout/gf2.hpp"
#include "lightsout/graph.hpp"
#include "lightsout/matchings.hpp"

namespace lightsout::bijection {

using Rational = boost::multiprecision::cpp_rational;

/// n x n matrix of an extremal graph: symmetric, invertible, all-ones
/// diagonal, row sums 1. Validated on construction.
struct ExtremalMatrix {
    gf2::BitMatrix m;
    explicit ExtremalMatrix(gf2::BitMatrix matrix);
};

/// (n-1) x (n-1) intermediate: symmetric, invertible, B*1 = diag(B).
struct BMatrix {
    gf2::BitMatrix b;
    explicit BMatrix(gf2::BitMatrix matrix);
};

/// (n-2) x (n-2) symmetric invertible matrix.
struct SymInvertible {
    gf2::BitMatrix x;
    explicit SymInvertible(gf2::BitMatrix matrix);
};

ExtremalMatrix graph_to_extremal_matrix(const Graph& g);
Graph extremal_matrix_to_graph(const ExtremalMatrix& m);

/// Partition M = [[1, r^T],[r, N]] and reduce to B = N + r r^T.
BMatrix phi1(const ExtremalMatrix& m);

/// Reconstruct via r = diag(B) + 1, N = B + r r^T.
ExtremalMatrix phi1_inv(const BMatrix& b);

/// Congruence by P = [[1, 1^T],[0, I]]; X is the lower-right block.
SymInvertible phi2(const BMatrix& b);

/// gamma = 1 + diag(X)^T X^{-1} diag(X); assemble B' and undo P.
BMatrix phi2_inv(const SymInvertible& x);

/// |S^n|: number of n x n symmetric invertible matrices over GF(2).
MatchCount count_sym_invertible(std::size_t n);

/// Number of labeled extremal graphs on n >= 2 vertices
/// (= |S^(n-2)|; n = 0, 1 both have exactly one, outside the formula).
MatchCount count_extremal(std::size_t n);

/// count_extremal(n) / 2^C(n-1,2), the share of even graphs that are
/// extremal; tends to about 0.419.
Rational extremal_fraction(std::size_t n);

/// Uniform labeled extremal graph on n >= 2 vertices: rejection-sample
/// S^(n-2), then pull back through the inverse bijections.
Graph sample_extremal(std::size_t n, std::mt19937_64& rng);

}  // namespace lightsout::bijection

#endif
