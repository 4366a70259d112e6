#include "coho/gf2.hpp"

#include <stdexcept>

namespace coho::gf2 {

SubspaceBasis::SubspaceBasis(std::size_t ambient, BitMatrix rref_rows)
    : ambient_(ambient), basis_(std::move(rref_rows)) {
    if (basis_.cols() != ambient_ && basis_.rows() > 0)
        throw std::invalid_argument("SubspaceBasis ambient mismatch");
}

SubspaceBasis SubspaceBasis::full(std::size_t ambient) {
    return SubspaceBasis(ambient, BitMatrix::identity(ambient));
}

SubspaceBasis SubspaceBasis::zero(std::size_t ambient) {
    return SubspaceBasis(ambient, BitMatrix(0, ambient));
}

SubspaceBasis SubspaceBasis::from_span(const std::vector<BitVec>& vecs, std::size_t ambient) {
    auto rr = BitMatrix::from_rows(vecs, ambient).rref();
    BitMatrix b(rr.rank, ambient);
    for (std::size_t r = 0; r < rr.rank; ++r) b.set_row(r, rr.mat.row(r));
    return SubspaceBasis(ambient, std::move(b));
}

bool SubspaceBasis::contains(const BitVec& v) const { return coordinates(v).has_value(); }

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_vector(i))) return false;
    return true;
}

std::optional<BitVec> SubspaceBasis::coordinates(const BitVec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("coordinates size mismatch");
    BitVec rem = v;
    BitVec coord(dim());
    // Basis is RREF: reduce by matching pivot positions.
    for (std::size_t i = 0; i < dim(); ++i) {
        BitVec b = basis_.row(i);
        std::size_t p = b.lowest_set();
        if (rem.get(p)) {
            rem ^= b;
            coord.set(i, true);
        }
    }
    if (!rem.is_zero()) return std::nullopt;
    return coord;
}

Rref row_reduce(const BitMatrix& m) { return m.rref(); }

SubspaceBasis nullspace_basis(const BitMatrix& m) {
    auto rr = m.rref();
    std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : rr.pivot_cols) is_pivot[c] = true;

    std::vector<BitVec> basis;
    basis.reserve(n - rr.rank);
    for (std::size_t free_c = 0; free_c < n; ++free_c) {
        if (is_pivot[free_c]) continue;
        BitVec v(n);
        v.set(free_c, true);
        for (std::size_t i = 0; i < rr.rank; ++i)
            if (rr.mat.get(i, free_c)) v.set(rr.pivot_cols[i], true);
        basis.push_back(std::move(v));
    }
    return SubspaceBasis::from_span(basis, n);
}

SubspaceBasis equalizer_basis(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("equalizer_basis shape mismatch");
    return nullspace_basis(a ^ b);
}

SubspaceBasis intersect_pair(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("intersect ambient mismatch");
    std::size_t n = a.ambient_dim();
    // Zassenhaus: row reduce [A|A; B|0]; rows with zero left half have right
    // halves spanning the intersection.
    BitMatrix top = BitMatrix::hstack(a.basis(), a.basis());
    BitMatrix bot = BitMatrix::hstack(b.basis(), BitMatrix(b.dim(), n));
    auto rr = BitMatrix::vstack(top, bot).rref();
    std::vector<BitVec> inter;
    for (std::size_t r = 0; r < rr.rank; ++r) {
        bool left_zero = true;
        for (std::size_t c = 0; c < n && left_zero; ++c)
            if (rr.mat.get(r, c)) left_zero = false;
        if (!left_zero) continue;
        BitVec v(n);
        for (std::size_t c = 0; c < n; ++c) if (rr.mat.get(r, n + c)) v.set(c, true);
        inter.push_back(std::move(v));
    }
    return SubspaceBasis::from_span(inter, n);
}

SubspaceBasis intersect_subspaces(const std::vector<SubspaceBasis>& spaces,
                                  std::size_t ambient_if_empty) {
    if (spaces.empty()) return SubspaceBasis::full(ambient_if_empty);
    SubspaceBasis acc = spaces[0];
    for (std::size_t i = 1; i < spaces.size(); ++i) acc = intersect_pair(acc, spaces[i]);
    return acc;
}

std::optional<BitVec> solve_linear(const BitMatrix& m, const BitVec& rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("solve_linear rhs size mismatch");
    BitMatrix rhs_col(m.rows(), 1);
    for (std::size_t r = 0; r < m.rows(); ++r) rhs_col.set(r, 0, rhs.get(r));
    auto rr = BitMatrix::hstack(m, rhs_col).rref();
    std::size_t n = m.cols();
    BitVec x(n);
    for (std::size_t i = 0; i < rr.rank; ++i) {
        std::size_t p = rr.pivot_cols[i];
        if (p == n) return std::nullopt;  // pivot in rhs column: inconsistent
        x.set(p, rr.mat.get(i, n));
    }
    return x;
}

std::vector<BitVec> complement_in(const SubspaceBasis& space, const SubspaceBasis& inside) {
    if (space.ambient_dim() != inside.ambient_dim())
        throw std::invalid_argument("complement ambient mismatch");
    std::vector<BitVec> acc;
    acc.reserve(inside.dim());
    for (std::size_t i = 0; i < inside.dim(); ++i) acc.push_back(inside.basis_vector(i));
    std::vector<BitVec> extra;
    std::size_t have = inside.dim();
    for (std::size_t i = 0; i < space.dim() && have < space.dim(); ++i) {
        BitVec cand = space.basis_vector(i);
        auto trial = acc;
        trial.push_back(cand);
        if (SubspaceBasis::from_span(trial, space.ambient_dim()).dim() > have) {
            acc.push_back(cand);
            extra.push_back(cand);
            ++have;
        }
    }
    return extra;
}

}  // namespace coho::gf2
