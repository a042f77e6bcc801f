#include "lightsout/bijection.hpp"

#include <stdexcept>

#include "lightsout/lightsout.hpp"

namespace lightsout::bijection {

using gf2::BitMatrix;
using gf2::BitVector;

ExtremalMatrix::ExtremalMatrix(BitMatrix matrix) : m(std::move(matrix)) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("ExtremalMatrix: not square");
    if (!m.is_symmetric()) throw std::invalid_argument("ExtremalMatrix: not symmetric");
    if (m.diagonal() != BitVector::ones(n))
        throw std::invalid_argument("ExtremalMatrix: diagonal not all ones");
    if (m.mul(BitVector::ones(n)) != BitVector::ones(n))
        throw std::invalid_argument("ExtremalMatrix: row sums not all one");
    if (!gf2::det2(m)) throw std::invalid_argument("ExtremalMatrix: singular");
}

BMatrix::BMatrix(BitMatrix matrix) : b(std::move(matrix)) {
    const std::size_t n = b.rows();
    if (b.cols() != n) throw std::invalid_argument("BMatrix: not square");
    if (!b.is_symmetric()) throw std::invalid_argument("BMatrix: not symmetric");
    if (!gf2::det2(b)) throw std::invalid_argument("BMatrix: singular");
    if (b.mul(BitVector::ones(n)) != b.diagonal())
        throw std::invalid_argument("BMatrix: B*1 != diag(B)");
}

SymInvertible::SymInvertible(BitMatrix matrix) : x(std::move(matrix)) {
    if (x.cols() != x.rows()) throw std::invalid_argument("SymInvertible: not square");
    if (!x.is_symmetric()) throw std::invalid_argument("SymInvertible: not symmetric");
    if (!gf2::det2(x)) throw std::invalid_argument("SymInvertible: singular");
}

ExtremalMatrix graph_to_extremal_matrix(const Graph& g) {
    if (!is_extremal(g).extremal)
        throw std::invalid_argument("graph_to_extremal_matrix: graph is not extremal");
    return ExtremalMatrix(closed_neighborhood_matrix(g));
}

Graph extremal_matrix_to_graph(const ExtremalMatrix& m) {
    const std::size_t n = m.m.rows();
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (m.m.get(u, v)) g.add_edge(u, v);
    return g;
}

BMatrix phi1(const ExtremalMatrix& m) {
    const std::size_t n = m.m.rows();
    if (n < 2) throw std::invalid_argument("phi1: order must be at least 2");
    BitVector r(n - 1);
    for (std::size_t i = 0; i < n - 1; ++i) r.set(i, m.m.get(i + 1, 0));
    BitMatrix b(n - 1, n - 1);
    for (std::size_t i = 0; i < n - 1; ++i)
        for (std::size_t j = 0; j < n - 1; ++j)
            b.set(i, j, m.m.get(i + 1, j + 1) ^ (r.get(i) && r.get(j)));
    return BMatrix(std::move(b));
}

ExtremalMatrix phi1_inv(const BMatrix& b) {
    const std::size_t k = b.b.rows();  // k = n - 1
    BitVector r = b.b.diagonal();
    r.xor_with(BitVector::ones(k));
    BitMatrix m(k + 1, k + 1);
    m.set(0, 0, true);
    for (std::size_t i = 0; i < k; ++i) {
        m.set(0, i + 1, r.get(i));
        m.set(i + 1, 0, r.get(i));
        for (std::size_t j = 0; j < k; ++j)
            m.set(i + 1, j + 1, b.b.get(i, j) ^ (r.get(i) && r.get(j)));
    }
    return ExtremalMatrix(std::move(m));
}

namespace {

// P = [[1, 1^T],[0, I]], self-inverse over GF(2).
BitMatrix p_transform(std::size_t size) {
    BitMatrix p = BitMatrix::identity(size);
    for (std::size_t j = 1; j < size; ++j) p.set(0, j, true);
    return p;
}

}  // namespace

SymInvertible phi2(const BMatrix& b) {
    const std::size_t k = b.b.rows();
    if (k < 1) throw std::invalid_argument("phi2: size must be at least 1");
    BitMatrix bp = gf2::congruence(p_transform(k), b.b);
    BitMatrix x(k - 1, k - 1);
    for (std::size_t i = 0; i + 1 < k; ++i)
        for (std::size_t j = 0; j + 1 < k; ++j)
            x.set(i, j, bp.get(i + 1, j + 1));
    return SymInvertible(std::move(x));
}

BMatrix phi2_inv(const SymInvertible& x) {
    const std::size_t k = x.x.rows();
    BitVector d = x.x.diagonal();
    bool gamma = true;  // empty sums give gamma = 1 at k = 0
    if (k > 0) gamma = !d.dot(gf2::inverse(x.x).mul(d));
    BitMatrix bp(k + 1, k + 1);
    bp.set(0, 0, gamma);
    for (std::size_t i = 0; i < k; ++i) {
        bp.set(0, i + 1, d.get(i));
        bp.set(i + 1, 0, d.get(i));
        for (std::size_t j = 0; j < k; ++j) bp.set(i + 1, j + 1, x.x.get(i, j));
    }
    return BMatrix(gf2::congruence(p_transform(k + 1), bp));
}

MatchCount count_sym_invertible(std::size_t n) {
    // 2^(C(n+1,2) - m^2) * prod_{i=1..m} (2^(2i-1) - 1), m = floor((n+1)/2)
    const std::size_t m = (n + 1) / 2;
    MatchCount result = MatchCount(1) << (n * (n + 1) / 2 - m * m);
    for (std::size_t i = 1; i <= m; ++i) result *= (MatchCount(1) << (2 * i - 1)) - 1;
    return result;
}

MatchCount count_extremal(std::size_t n) {
    if (n < 2) throw std::invalid_argument("count_extremal: n must be at least 2");
    return count_sym_invertible(n - 2);
}

Rational extremal_fraction(std::size_t n) {
    if (n < 2) throw std::invalid_argument("extremal_fraction: n must be at least 2");
    return Rational(count_extremal(n), MatchCount(1) << ((n - 1) * (n - 2) / 2));
}

Graph sample_extremal(std::size_t n, std::mt19937_64& rng) {
    if (n < 2) throw std::invalid_argument("sample_extremal: n must be at least 2");
    SymInvertible x(gf2::random_symmetric_invertible(n - 2, rng));
    return extremal_matrix_to_graph(phi1_inv(phi2_inv(x)));
}

}  // namespace lightsout::bijection
