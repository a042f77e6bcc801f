#ifndef LIGHTSOUT_GF2_HPP
#define LIGHTSOUT_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace lightsout::gf2 {

/// Dense bit vector over GF(2). Trailing padding bits are kept zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

    static BitVector ones(std::size_t len);
    static BitVector unit(std::size_t len, std::size_t i);

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool b) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (b) words_[i >> 6] |= mask; else words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    void xor_with(const BitVector& other);

    std::size_t count() const;
    bool is_zero() const;

    /// Parity of the bitwise AND with another vector (GF(2) inner product).
    bool dot(const BitVector& other) const;

    /// Ordering for tie-breaks: at the first differing index the vector
    /// with that bit set comes first (press lower-numbered vertices).
    bool lex_less(const BitVector& other) const;

    bool operator==(const BitVector&) const = default;

    const std::vector<std::uint64_t>& words() const { return words_; }

    std::string to_string() const;  // e.g. "1010"
    static BitVector from_string(const std::string& s);

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense row-major bit matrix over GF(2).
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool b) { data_[r].set(c, b); }
    void flip(std::size_t r, std::size_t c) { data_[r].flip(c); }

    const BitVector& row(std::size_t r) const { return data_[r]; }
    BitVector& row(std::size_t r) { return data_[r]; }

    BitMatrix transpose() const;
    bool is_symmetric() const;

    BitVector mul(const BitVector& v) const;
    BitMatrix mul(const BitMatrix& other) const;

    BitVector diagonal() const;

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVector> data_;
};

/// Result of Gaussian elimination. `transform * input == rref` where
/// `transform` is an invertible rows x rows matrix.
struct Elimination {
    std::size_t rank = 0;
    bool det = false;  // meaningful only when the input is square
    std::vector<std::size_t> pivot_cols;
    BitMatrix rref;
    BitMatrix transform;
};

/// Full row reduction; the input matrix is not modified.
Elimination eliminate(const BitMatrix& m);

/// Determinant over GF(2). The 0x0 matrix has determinant 1.
bool det2(const BitMatrix& m);

struct AffineSolutionSpace {
    BitVector particular;
    std::vector<BitVector> kernel_basis;
};

/// Solve m*x = b. Returns the reduced-echelon particular solution (free
/// variables zero) plus a kernel basis, or nullopt when inconsistent.
std::optional<AffineSolutionSpace> solve(const BitMatrix& m, const BitVector& b);

/// Kernel basis of m (size = cols - rank).
std::vector<BitVector> kernel(const BitMatrix& m);

/// Inverse of a square invertible matrix. Throws on singular input,
/// naming a kernel witness vector in the message.
BitMatrix inverse(const BitMatrix& m);

/// l * a * l^T. Requires a symmetric; the result is symmetric.
BitMatrix congruence(const BitMatrix& l, const BitMatrix& a);

/// Uniform sample from the symmetric invertible n x n matrices, by
/// rejection on the n(n+1)/2 free bits. Acceptance probability > 0.419.
BitMatrix random_symmetric_invertible(std::size_t n, std::mt19937_64& rng);

}  // namespace lightsout::gf2

#endif
