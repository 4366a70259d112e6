// Minimal free resolutions of the trivial module over the group algebra of a
// 2-group, via the regular representation: F_n = F2[P]^{b_n} seen as the
// F2-space F2^{b_n |P|} with coordinates (block j, group element g).
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "coho/gf2.hpp"
#include "coho/group.hpp"
#include "coho/group_ops.hpp"

namespace coho::resol {

/// Cohomology class of degree n, in the dual basis of the minimal resolution:
/// dim H^n = b_n, coordinates a bit-vector of length b_n.
struct Cocycle {
    std::size_t degree = 0;
    gf2::BitVec coords;

    bool is_zero() const { return coords.is_zero(); }
    bool operator==(const Cocycle& o) const { return degree == o.degree && coords == o.coords; }
};

class MinimalResolution {
public:
    /// Builds the resolution of F2 over F2[p] out to max_degree.
    /// Throws std::invalid_argument if p is not a 2-group, ScaleError if
    /// |p| > order_cap.
    MinimalResolution(perm::Group p, std::size_t max_degree, std::uint64_t order_cap = 256);

    const perm::Group& group() const { return group_; }
    std::size_t group_order() const { return elements_.size(); }
    std::size_t max_degree() const { return ranks_.size() - 1; }
    std::size_t rank(std::size_t n) const { return ranks_.at(n); }

    /// d_n : F_n -> F_{n-1}, shape (b_{n-1}|P|) x (b_n|P|), n >= 1.
    const gf2::BitMatrix& differential(std::size_t n) const { return diffs_.at(n - 1); }

    /// Elements sorted by image table; fixed once, so matrices are
    /// reproducible.
    const std::vector<perm::Perm>& elements() const { return elements_; }
    std::size_t element_index(const perm::Perm& x) const;
    std::size_t identity_index() const { return id_idx_; }
    /// Index of elements[a] * elements[b].
    std::size_t mult_index(std::size_t a, std::size_t b) const { return mtable_[a * elements_.size() + b]; }

    /// Regular-representation action of element e on F_n coordinates with the
    /// given block count.
    gf2::BitVec act(std::size_t elem_idx, const gf2::BitVec& v, std::size_t blocks) const;

    /// Collapse a vector of F_n to cocycle pairing coordinates: c_j = sum over
    /// the block-j group coordinates.
    gf2::BitVec collapse(const gf2::BitVec& v, std::size_t blocks) const;

    /// Extends the resolution in place (exclusive operation).
    void extend(std::size_t new_max_degree);

private:
    void build_degree();  // appends one degree

    perm::Group group_;
    std::vector<perm::Perm> elements_;
    std::vector<std::uint32_t> mtable_;
    std::size_t id_idx_ = 0;
    std::vector<std::size_t> gen_idx_;             // indices of group generators
    std::vector<std::size_t> ranks_;               // b_0..b_N
    std::vector<gf2::BitMatrix> diffs_;            // d_1..d_N
    std::vector<gf2::BitVec> top_kernel_gens_;     // minimal generators of ker(d_N)
};

/// Cohomology of a 2-group: resolution plus cached chain-map lifts giving cup
/// products as per-degree multiplication matrices.
class PGroupCohomology {
public:
    PGroupCohomology(perm::Group p, std::size_t max_degree, std::uint64_t order_cap = 256);

    const MinimalResolution& resolution() const { return *res_; }
    const perm::Group& group() const { return res_->group(); }
    std::size_t max_degree() const { return res_->max_degree(); }
    std::size_t dim(std::size_t n) const { return res_->rank(n); }

    /// Matrix of y -> x∪y : H^k -> H^{k+deg x}.
    const gf2::BitMatrix& mult_matrix(const Cocycle& x, std::size_t k) const;
    Cocycle cup(const Cocycle& x, const Cocycle& y) const;
    /// Evaluates a power product prod of cocycles (left to right).
    Cocycle product(const std::vector<Cocycle>& factors) const;
    Cocycle one() const;  // identity of H^0

    void extend(std::size_t new_max_degree);

private:
    struct Lift;  // chain map lift of a cocycle
    Lift& lift_for(const Cocycle& x) const;

    std::shared_ptr<MinimalResolution> res_;
    mutable std::map<std::pair<std::size_t, std::vector<std::uint64_t>>,
                     std::shared_ptr<Lift>> lifts_;
};

/// Matrices of psi^* : H^k(Q) -> H^k(P) for k <= n, for a homomorphism
/// psi : P -> Q between the resolved 2-groups. Matrix k has shape
/// b^P_k x b^Q_k and acts on coordinate columns.
std::vector<gf2::BitMatrix> induced_map(const perm::Hom& psi, const MinimalResolution& rp,
                                        const MinimalResolution& rq, std::size_t n);

}  // namespace coho::resol
