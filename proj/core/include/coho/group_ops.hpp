// Group-theoretic operations: conjugation orbits, centralizers, Sylow
// 2-subgroups, central series, normalizers, double cosets, maximal
// elementary abelian subgroups, and homomorphisms between permutation groups.
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>

#include "coho/flatmap.hpp"
#include "coho/group.hpp"

namespace coho::perm {

class ScaleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OrbitLimits {
    std::uint64_t max_orbit = 3'000'000;     // conjugation-orbit cap (memory opt-in raises it)
    std::uint64_t store_threshold = 300'000; // keep full image tables up to this many nodes
};

/// BFS orbit of an element under conjugation by a group. Nodes are stored as
/// 128-bit hashes plus parent pointers; full image tables only below the
/// storage threshold.
class ConjugationOrbit {
public:
    ConjugationOrbit(const Group& g, const Perm& x0, const OrbitLimits& lim = {});

    std::uint64_t size() const { return parents_.size(); }
    bool truncated() const { return truncated_; }
    const Group& group() const { return *group_; }
    const Perm& seed() const { return x0_; }

    /// c with x0 conjugated by c == element(i).
    Perm conjugator(std::uint32_t i) const;
    Perm element(std::uint32_t i) const;
    std::uint32_t index_of(const Perm& y) const;
    bool has_stored() const { return !stored_.empty(); }
    const Perm& stored_element(std::uint32_t i) const { return stored_[i]; }

    /// Random Schreier generator of the stabilizer of x0.
    Perm schreier_generator(std::uint32_t node, std::uint32_t gen_idx) const;
    std::size_t action_gen_count() const { return action_gens_.size(); }

private:
    const Group* group_;
    Perm x0_;
    std::vector<Perm> action_gens_;  // generators and inverses
    std::vector<std::pair<std::uint32_t, std::uint16_t>> parents_;  // (parent, gen idx)
    HashIndexMap index_;
    std::vector<Perm> stored_;
    bool truncated_ = false;
};

/// Stabilizer of the orbit seed: Schreier generators sampled until the exact
/// orbit-stabilizer order is reached, with a deterministic sweep as fallback.
Group stabilizer_from_orbit(const ConjugationOrbit& orbit, Rng& rng,
                            const std::vector<Perm>& known_members = {});

Group centralizer_of_element(const Group& g, const Perm& x, Rng& rng,
                             const OrbitLimits& lim = {});

struct ElementClassReport {
    std::uint64_t element_order = 0;
    std::uint64_t class_size = 0;
    std::uint64_t centralizer_order = 0;
};
ElementClassReport classify_element(const Group& g, const Perm& x, Rng& rng,
                                    const OrbitLimits& lim = {});

Group sylow_2(const Group& g, Rng& rng, const OrbitLimits& lim = {});

struct AbelianType {
    std::vector<std::uint64_t> cyclic_orders;  // descending, e.g. {4,2} for C4 x C2
    std::string to_string() const;
    bool operator==(const AbelianType& o) const { return cyclic_orders == o.cyclic_orders; }
};
AbelianType abelian_type(const Group& a, std::uint64_t cap = 4096);

struct CentralSeries {
    Group center;
    Group second_center;
    AbelianType center_type;
    AbelianType second_center_type;
};
CentralSeries central_series(const Group& s, std::uint64_t cap = 4096);

Group normalizer(const Group& g, const Group& h, Rng& rng, const OrbitLimits& lim = {});

Group subgroup_intersection(const Group& g, const Group& a, const Group& b,
                            std::uint64_t cap = 1u << 20);

struct DoubleCosetDecomposition {
    std::vector<Perm> representatives;
    std::vector<std::uint64_t> sizes;
    std::uint64_t group_order = 0;
    std::uint64_t subgroup_order = 0;
};
/// H\G/H by enumerating H-orbits on right cosets; throws ScaleError when the
/// index exceeds max_cosets.
DoubleCosetDecomposition double_cosets(const Group& g, const Group& h,
                                       std::uint64_t max_cosets = 1'000'000);
/// Same decomposition for H = C_G(z), via H-orbits on the conjugates of z.
DoubleCosetDecomposition double_cosets_by_conjugation(const Group& g, const Perm& z, Rng& rng,
                                                      const OrbitLimits& lim = {});

struct MaxElementaryAbelian {
    Group subgroup;
    std::size_t rank = 0;
    int fusion_class = 0;
};
/// All maximal elementary abelian subgroups of the 2-group s, up to
/// s-conjugacy, fused by the ambient invariant: two classes get the same
/// fusion id iff their involution invariant multisets agree.
std::vector<MaxElementaryAbelian> maximal_elementary_abelians(
    const Group& s, const std::function<std::uint64_t(const Perm&)>& ambient_invariant,
    std::uint64_t cap = 4096);

/// Group homomorphism, stored as its graph subgroup of source x target with
/// the stabilizer-chain base inside the source part so evaluation is a
/// transversal walk.
class Hom {
public:
    Hom() = default;
    /// Maps src.generators()[i] to gen_images[i]; throws if that assignment
    /// does not extend to a homomorphism.
    Hom(const Group& src, std::vector<Perm> gen_images, std::size_t target_degree);
    static Hom identity(const Group& g);
    /// Inclusion of sub into an ambient group on the same points.
    static Hom inclusion(const Group& sub);
    /// x -> c^{-1} x c.
    static Hom conjugation(const Group& src, const Perm& c);

    std::size_t source_degree() const { return sdeg_; }
    std::size_t target_degree() const { return tdeg_; }
    const Group& source() const { return src_; }
    const std::vector<Perm>& generator_images() const { return images_; }
    Group image() const { return Group(images_.empty() ? std::vector<Perm>{Perm(tdeg_)} : images_); }

    Perm apply(const Perm& x) const;
    /// this ∘ inner.
    Hom after(const Hom& inner) const;
    /// Inverse of a bijective-onto-image homomorphism.
    Hom inverse_iso() const;

private:
    Group src_;
    std::vector<Perm> images_;
    std::size_t sdeg_ = 0, tdeg_ = 0;
    std::shared_ptr<StabChain> graph_;
};

Perm perm_power(const Perm& p, std::uint64_t k);
std::uint64_t two_part_of(std::uint64_t n);

}  // namespace coho::perm
