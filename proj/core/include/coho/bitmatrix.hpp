// Dense bit-packed linear algebra over GF(2).
#pragma once

#include <cstdint>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace coho::gf2 {

/// Packed vector over GF(2).
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVec& operator^=(const BitVec& o);
    friend BitVec operator^(BitVec a, const BitVec& b) { a ^= b; return a; }

    bool is_zero() const;
    std::size_t popcount() const;
    /// Index of lowest set bit, or size() if zero.
    std::size_t lowest_set() const;

    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator<(const BitVec& o) const;   // lexicographic on words, for map keys

    const std::vector<std::uint64_t>& words() const { return w_; }
    std::vector<std::uint64_t>& mutable_words() { return w_; }
    std::string to_string() const;           // e.g. "10110"

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct Rref;

/// Row-major bit-packed matrix over GF(2). Immutable in spirit: operations
/// return new values.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), bits_(rows * wpr_, 0) {}

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(const std::vector<BitVec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (bits_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        std::uint64_t m = std::uint64_t{1} << (c & 63);
        if (v) bits_[r * wpr_ + (c >> 6)] |= m; else bits_[r * wpr_ + (c >> 6)] &= ~m;
    }

    BitVec row(std::size_t r) const;
    void set_row(std::size_t r, const BitVec& v);
    void xor_row(std::size_t dst, std::size_t src);   // row[dst] ^= row[src]
    void swap_rows(std::size_t i, std::size_t j);
    bool row_is_zero(std::size_t r) const;

    BitMatrix transpose() const;
    BitMatrix mul(const BitMatrix& o) const;          // this * o
    BitVec apply(const BitVec& x) const;              // this * x, x of length cols()
    friend BitMatrix operator^(BitMatrix a, const BitMatrix& b);  // entrywise sum

    static BitMatrix vstack(const BitMatrix& a, const BitMatrix& b);
    static BitMatrix hstack(const BitMatrix& a, const BitMatrix& b);

    bool operator==(const BitMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
    }

    /// Reduced row echelon form; pivots strictly increasing, zero rows moved
    /// to the bottom (kept, so shape is preserved).
    Rref rref() const;
    std::size_t rank() const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> bits_;
};

struct Rref {
    BitMatrix mat;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

}  // namespace coho::gf2
