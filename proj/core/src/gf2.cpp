#include "lightsout/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace lightsout::gf2 {

BitVector BitVector::ones(std::size_t len) {
    BitVector v(len);
    for (std::size_t w = 0; w < v.words_.size(); ++w) v.words_[w] = ~std::uint64_t{0};
    if (len & 63) v.words_.back() = (std::uint64_t{1} << (len & 63)) - 1;
    if (len == 0) v.words_.clear();
    return v;
}

BitVector BitVector::unit(std::size_t len, std::size_t i) {
    BitVector v(len);
    v.set(i, true);
    return v;
}

void BitVector::xor_with(const BitVector& other) {
    if (other.len_ != len_) throw std::invalid_argument("BitVector::xor_with: length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
}

std::size_t BitVector::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool BitVector::is_zero() const {
    for (auto w : words_) if (w) return false;
    return true;
}

bool BitVector::dot(const BitVector& other) const {
    if (other.len_ != len_) throw std::invalid_argument("BitVector::dot: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
}

bool BitVector::lex_less(const BitVector& other) const {
    for (std::size_t i = 0; i < len_ && i < other.len_; ++i) {
        bool a = get(i), b = other.get(i);
        if (a != b) return a;
    }
    return len_ < other.len_;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i) if (get(i)) s[i] = '1';
    return s;
}

BitVector BitVector::from_string(const std::string& s) {
    BitVector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') v.set(i, true);
        else if (s[i] != '0') throw std::invalid_argument("BitVector::from_string: expected 0/1");
    }
    return v;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

bool BitMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if (get(r, c) != get(c, r)) return false;
    return true;
}

BitVector BitMatrix::mul(const BitVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("BitMatrix::mul: dimension mismatch");
    BitVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.set(r, data_[r].dot(v));
    return out;
}

BitMatrix BitMatrix::mul(const BitMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("BitMatrix::mul: shape mismatch");
    BitMatrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k)
            if (get(r, k)) out.row(r).xor_with(other.row(k));
    return out;
}

BitVector BitMatrix::diagonal() const {
    std::size_t n = rows_ < cols_ ? rows_ : cols_;
    BitVector d(n);
    for (std::size_t i = 0; i < n; ++i) d.set(i, get(i, i));
    return d;
}

Elimination eliminate(const BitMatrix& m) {
    Elimination e;
    e.rref = m;
    e.transform = BitMatrix::identity(m.rows());
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && !e.rref.get(piv, c)) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r) {
            std::swap(e.rref.row(piv), e.rref.row(r));
            std::swap(e.transform.row(piv), e.transform.row(r));
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i != r && e.rref.get(i, c)) {
                e.rref.row(i).xor_with(e.rref.row(r));
                e.transform.row(i).xor_with(e.transform.row(r));
            }
        }
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.rank = r;
    if (m.rows() == m.cols()) e.det = (e.rank == m.rows());
    return e;
}

bool det2(const BitMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det2: matrix not square");
    if (m.rows() == 0) return true;  // empty product
    return eliminate(m).det;
}

std::optional<AffineSolutionSpace> solve(const BitMatrix& m, const BitVector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
    Elimination e = eliminate(m);
    BitVector y = e.transform.mul(b);
    for (std::size_t r = e.rank; r < m.rows(); ++r)
        if (y.get(r)) return std::nullopt;

    AffineSolutionSpace s;
    s.particular = BitVector(m.cols());
    for (std::size_t r = 0; r < e.rank; ++r)
        s.particular.set(e.pivot_cols[r], y.get(r));

    std::size_t next_pivot = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (next_pivot < e.pivot_cols.size() && e.pivot_cols[next_pivot] == c) {
            ++next_pivot;
            continue;
        }
        BitVector k(m.cols());
        k.set(c, true);
        for (std::size_t r = 0; r < e.rank; ++r)
            if (e.rref.get(r, c)) k.set(e.pivot_cols[r], true);
        s.kernel_basis.push_back(std::move(k));
    }
    return s;
}

std::vector<BitVector> kernel(const BitMatrix& m) {
    auto s = solve(m, BitVector(m.rows()));
    return s->kernel_basis;  // the zero system is always consistent
}

BitMatrix inverse(const BitMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    Elimination e = eliminate(m);
    if (e.rank != m.rows()) {
        auto k = kernel(m);
        throw std::domain_error("inverse: singular matrix, kernel witness " +
                                k.front().to_string());
    }
    return e.transform;  // rref == I, so transform * m == I
}

BitMatrix congruence(const BitMatrix& l, const BitMatrix& a) {
    if (!a.is_symmetric()) throw std::invalid_argument("congruence: a not symmetric");
    if (l.cols() != a.rows()) throw std::invalid_argument("congruence: shape mismatch");
    return l.mul(a).mul(l.transpose());
}

BitMatrix random_symmetric_invertible(std::size_t n, std::mt19937_64& rng) {
    BitMatrix m(n, n);
    if (n == 0) return m;
    for (;;) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                bool b = rng() & 1;
                m.set(i, j, b);
                m.set(j, i, b);
            }
        if (det2(m)) return m;
    }
}

}  // namespace lightsout::gf2
