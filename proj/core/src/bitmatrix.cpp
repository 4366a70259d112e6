#include "coho/bitmatrix.hpp"

#include <bit>
#include <stdexcept>

namespace coho::gf2 {

BitVec& BitVec::operator^=(const BitVec& o) {
    if (n_ != o.n_) throw std::invalid_argument("BitVec size mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

bool BitVec::is_zero() const {
    for (auto w : w_) if (w) return false;
    return true;
}

std::size_t BitVec::popcount() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

std::size_t BitVec::lowest_set() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
        if (w_[k]) return k * 64 + std::countr_zero(w_[k]);
    return n_;
}

bool BitVec::operator<(const BitVec& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return w_ < o.w_;
}

std::string BitVec::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i) if (get(i)) s[i] = '1';
    return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVec>& rows, std::size_t cols) {
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

BitVec BitMatrix::row(std::size_t r) const {
    BitVec v(cols_);
    for (std::size_t k = 0; k < wpr_; ++k) v.mutable_words()[k] = bits_[r * wpr_ + k];
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVec& v) {
    if (v.size() != cols_) throw std::invalid_argument("set_row size mismatch");
    for (std::size_t k = 0; k < wpr_; ++k) bits_[r * wpr_ + k] = v.words()[k];
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) {
    for (std::size_t k = 0; k < wpr_; ++k) bits_[dst * wpr_ + k] ^= bits_[src * wpr_ + k];
}

void BitMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < wpr_; ++k)
        std::swap(bits_[i * wpr_ + k], bits_[j * wpr_ + k]);
}

bool BitMatrix::row_is_zero(std::size_t r) const {
    for (std::size_t k = 0; k < wpr_; ++k) if (bits_[r * wpr_ + k]) return false;
    return true;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < wpr_; ++k) {
            std::uint64_t w = bits_[r * wpr_ + k];
            while (w) {
                int b = std::countr_zero(w);
                w &= w - 1;
                t.set(k * 64 + b, r, true);
            }
        }
    return t;
}

BitMatrix BitMatrix::mul(const BitMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("mul shape mismatch");
    BitMatrix out(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < wpr_; ++k) {
            std::uint64_t w = bits_[r * wpr_ + k];
            while (w) {
                int b = std::countr_zero(w);
                w &= w - 1;
                std::size_t j = k * 64 + b;  // this[r][j] = 1: out.row(r) ^= o.row(j)
                for (std::size_t q = 0; q < out.wpr_; ++q)
                    out.bits_[r * out.wpr_ + q] ^= o.bits_[j * o.wpr_ + q];
            }
        }
    }
    return out;
}

BitVec BitMatrix::apply(const BitVec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("apply size mismatch");
    BitVec y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < wpr_; ++k) acc ^= bits_[r * wpr_ + k] & x.words()[k];
        y.set(r, std::popcount(acc) & 1);
    }
    return y;
}

BitMatrix operator^(BitMatrix a, const BitMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    for (std::size_t i = 0; i < a.bits_.size(); ++i) a.bits_[i] ^= b.bits_[i];
    return a;
}

BitMatrix BitMatrix::vstack(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols_ != b.cols_) throw std::invalid_argument("vstack cols mismatch");
    BitMatrix m(a.rows_ + b.rows_, a.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.wpr_; ++k) m.bits_[r * m.wpr_ + k] = a.bits_[r * a.wpr_ + k];
    for (std::size_t r = 0; r < b.rows_; ++r)
        for (std::size_t k = 0; k < b.wpr_; ++k)
            m.bits_[(a.rows_ + r) * m.wpr_ + k] = b.bits_[r * b.wpr_ + k];
    return m;
}

BitMatrix BitMatrix::hstack(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("hstack rows mismatch");
    BitMatrix m(a.rows_, a.cols_ + b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t c = 0; c < a.cols_; ++c) if (a.get(r, c)) m.set(r, c, true);
        for (std::size_t c = 0; c < b.cols_; ++c) if (b.get(r, c)) m.set(r, a.cols_ + c, true);
    }
    return m;
}

Rref BitMatrix::rref() const {
    Rref out;
    out.mat = *this;
    BitMatrix& m = out.mat;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && !m.get(piv, c)) ++piv;
        if (piv == rows_) continue;
        m.swap_rows(r, piv);
        for (std::size_t i = 0; i < rows_; ++i)
            if (i != r && m.get(i, c)) m.xor_row(i, r);
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

std::string BitMatrix::to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) s += get(r, c) ? '1' : '0';
        s += '\n';
    }
    return s;
}

}  // namespace coho::gf2

namespace coho::gf2 {
std::size_t BitMatrix::rank() const { return rref().rank; }
}
