// Permutation groups with a base and strong generating set (Schreier-Sims).
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "coho/perm.hpp"

namespace coho::perm {

using Rng = std::mt19937_64;

/// Stabilizer chain. Level i stabilizes base points 0..i-1 pointwise.
class StabChain {
public:
    struct Level {
        Point base = 0;
        std::vector<Point> orbit;          // fundamental orbit, orbit[0] == base
        std::vector<int32_t> slot;         // point -> index into orbit, or -1
        std::vector<Perm> transversal;     // transversal[slot[p]](base) == p
    };

    StabChain() = default;
    /// Deterministic Schreier-Sims. `preferred_base` points are used first
    /// (in order) when choosing base points.
    StabChain(std::vector<Perm> generators, std::vector<Point> preferred_base = {});

    std::size_t degree() const { return degree_; }
    std::uint64_t order() const { return order_; }
    const std::vector<Level>& levels() const { return levels_; }
    const std::vector<Perm>& strong_generators() const { return sgens_; }

    bool contains(const Perm& g) const;
    /// Residue of sifting g through levels >= from; second = first stuck level
    /// (levels_.size() if fully sifted).
    std::pair<Perm, std::size_t> sift(const Perm& g, std::size_t from = 0) const;

    /// Uniformly random element.
    Perm random_element(Rng& rng) const;

    /// Element g with g(base_i) = images(base_i) for every level whose base
    /// point is in the prescribed set; nullopt if no such element exists.
    /// `prescribed(p)` returns the required image of p or -1 for "free".
    std::optional<Perm> element_with_images(const std::function<int32_t(Point)>& prescribed) const;

    /// Visits every group element exactly once. Returns false (and stops)
    /// if more than `cap` elements were visited.
    bool for_each_element(const std::function<void(const Perm&)>& fn, std::uint64_t cap) const;

private:
    void rebuild_orbit(std::size_t i);
    std::vector<Perm> level_gens(std::size_t i) const;
    void schreier_sims();

    std::size_t degree_ = 0;
    std::uint64_t order_ = 1;
    std::vector<Perm> sgens_;
    std::vector<Perm> gens_;
    std::vector<Level> levels_;
    std::vector<Point> preferred_;
};

/// A permutation group, lazily building its stabilizer chain.
class Group {
public:
    Group() = default;
    explicit Group(std::vector<Perm> gens, std::vector<Point> preferred_base = {});

    std::size_t degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return gens_; }

    std::uint64_t order() const { return chain().order(); }
    bool contains(const Perm& g) const { return chain().contains(g); }
    bool contains(const Group& h) const;
    bool is_trivial() const { return order() == 1; }

    /// Exact power of 2 dividing the order.
    std::uint64_t two_part() const;
    bool is_2group() const { return order() == two_part(); }
    bool is_abelian() const;
    /// All generators are commuting involutions.
    bool is_elementary_abelian_2() const;

    Perm random_element(Rng& rng) const { return chain().random_element(rng); }
    std::vector<Point> orbit(Point p) const;
    /// Orbits of the natural action, each sorted.
    std::vector<std::vector<Point>> orbits() const;

    /// Every element; throws if order() > cap.
    std::vector<Perm> elements(std::uint64_t cap = 1u << 20) const;

    const StabChain& chain() const;

    Perm identity() const { return Perm(degree_); }

private:
    std::size_t degree_ = 0;
    std::vector<Perm> gens_;
    std::vector<Point> preferred_;
    mutable std::shared_ptr<StabChain> chain_;  // built once, then immutable
};

/// Conjugate subgroup g^{-1} H g.
Group conjugate_group(const Group& h, const Perm& g);

}  // namespace coho::perm
