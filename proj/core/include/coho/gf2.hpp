// Subspace-level operations over GF(2): echelonized bases, nullspaces,
// equalizers, intersections, linear solving.
#pragma once

#include <optional>
#include <vector>

#include "coho/bitmatrix.hpp"

namespace coho::gf2 {

/// Subspace of F2^ambient given by a basis in reduced row echelon form.
/// RREF makes bases canonical: two SubspaceBasis are equal as subspaces
/// iff their basis matrices are equal.
class SubspaceBasis {
public:
    SubspaceBasis() = default;
    SubspaceBasis(std::size_t ambient, BitMatrix rref_rows);

    static SubspaceBasis full(std::size_t ambient);
    static SubspaceBasis zero(std::size_t ambient);
    /// Echelonizes arbitrary spanning rows.
    static SubspaceBasis from_span(const std::vector<BitVec>& vecs, std::size_t ambient);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const BitMatrix& basis() const { return basis_; }
    BitVec basis_vector(std::size_t i) const { return basis_.row(i); }

    bool contains(const BitVec& v) const;
    bool contains(const SubspaceBasis& other) const;
    /// Coordinates of v in this basis; nullopt if v is outside the span.
    std::optional<BitVec> coordinates(const BitVec& v) const;

    bool operator==(const SubspaceBasis& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }

private:
    std::size_t ambient_ = 0;
    BitMatrix basis_;  // dim x ambient, RREF, no zero rows
};

Rref row_reduce(const BitMatrix& m);

/// Basis of {x : m x = 0}.
SubspaceBasis nullspace_basis(const BitMatrix& m);

/// Basis of {x : a x = b x} = nullspace of a + b. Shapes must agree.
SubspaceBasis equalizer_basis(const BitMatrix& a, const BitMatrix& b);

/// Intersection of subspaces of a common ambient space. Empty list gives the
/// full space, which needs the ambient dimension.
SubspaceBasis intersect_subspaces(const std::vector<SubspaceBasis>& spaces,
                                  std::size_t ambient_if_empty);
SubspaceBasis intersect_pair(const SubspaceBasis& a, const SubspaceBasis& b);

/// Some x with m x = rhs, or nullopt if the system is inconsistent.
std::optional<BitVec> solve_linear(const BitMatrix& m, const BitVec& rhs);

/// Extends the rows of `inside` (RREF) to a basis of `space`: returns vectors
/// of `space` completing `inside` to a basis. `inside` must be contained in
/// `space`.
std::vector<BitVec> complement_in(const SubspaceBasis& space, const SubspaceBasis& inside);

}  // namespace coho::gf2
