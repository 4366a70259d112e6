#include "coho/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace coho::perm {

StabChain::StabChain(std::vector<Perm> generators, std::vector<Point> preferred_base)
    : preferred_(std::move(preferred_base)) {
    for (auto& g : generators) {
        if (degree_ == 0) degree_ = g.degree();
        if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
        if (!g.is_identity()) gens_.push_back(std::move(g));
    }
    if (degree_ == 0) degree_ = 1;
    schreier_sims();
}

std::vector<Perm> StabChain::level_gens(std::size_t i) const {
    std::vector<Perm> out;
    for (const auto& g : sgens_) {
        bool ok = true;
        for (std::size_t l = 0; l < i && ok; ++l)
            if (g(levels_[l].base) != levels_[l].base) ok = false;
        if (ok) out.push_back(g);
    }
    return out;
}

void StabChain::rebuild_orbit(std::size_t i) {
    Level& lv = levels_[i];
    auto gens = level_gens(i);
    lv.orbit.clear();
    lv.slot.assign(degree_, -1);
    lv.transversal.clear();
    lv.orbit.push_back(lv.base);
    lv.slot[lv.base] = 0;
    lv.transversal.push_back(Perm(degree_));
    for (std::size_t q = 0; q < lv.orbit.size(); ++q) {
        Point p = lv.orbit[q];
        for (const auto& g : gens) {
            Point r = g(p);
            if (lv.slot[r] < 0) {
                lv.slot[r] = static_cast<int32_t>(lv.orbit.size());
                lv.orbit.push_back(r);
                lv.transversal.push_back(g * lv.transversal[q]);
            }
        }
    }
}

std::pair<Perm, std::size_t> StabChain::sift(const Perm& g, std::size_t from) const {
    Perm r = g;
    for (std::size_t l = from; l < levels_.size(); ++l) {
        Point p = r(levels_[l].base);
        if (levels_[l].slot[p] < 0) return {r, l};
        r = levels_[l].transversal[levels_[l].slot[p]].inverse() * r;
    }
    return {r, levels_.size()};
}

void StabChain::schreier_sims() {
    order_ = 1;
    sgens_ = gens_;
    if (sgens_.empty()) return;

    auto pick_base = [&](const Perm& g) -> Point {
        for (Point p : preferred_)
            if (g(p) != p) {
                bool used = false;
                for (const auto& lv : levels_) used |= (lv.base == p);
                if (!used) return p;
            }
        for (std::size_t p = 0; p < degree_; ++p) {
            bool used = false;
            for (const auto& lv : levels_) used |= (lv.base == static_cast<Point>(p));
            if (!used && g(static_cast<Point>(p)) != p) return static_cast<Point>(p);
        }
        throw std::logic_error("no base point available");
    };

    // Seed levels so every strong generator moves some base point.
    for (const auto& g : sgens_) {
        bool fixes_all = true;
        for (const auto& lv : levels_)
            if (g(lv.base) != lv.base) { fixes_all = false; break; }
        if (fixes_all) {
            Level lv;
            lv.base = pick_base(g);
            levels_.push_back(lv);
        }
    }
    for (std::size_t i = 0; i < levels_.size(); ++i) rebuild_orbit(i);

    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
        rebuild_orbit(static_cast<std::size_t>(i));
        Level& lv = levels_[static_cast<std::size_t>(i)];
        auto gens = level_gens(static_cast<std::size_t>(i));
        bool dirty = false;
        for (std::size_t q = 0; q < lv.orbit.size() && !dirty; ++q) {
            Point p = lv.orbit[q];
            const Perm& tp = lv.transversal[q];
            for (const auto& s : gens) {
                Point sp = s(p);
                Perm h = lv.transversal[lv.slot[sp]].inverse() * (s * tp);
                if (h.is_identity()) continue;
                auto [res, j] = sift(h, static_cast<std::size_t>(i) + 1);
                if (res.is_identity()) continue;
                if (j == levels_.size()) {
                    Level nl;
                    nl.base = pick_base(res);
                    levels_.push_back(nl);
                }
                sgens_.push_back(res);
                for (std::size_t k = static_cast<std::size_t>(i) + 1; k <= j && k < levels_.size(); ++k)
                    rebuild_orbit(k);
                i = static_cast<std::ptrdiff_t>(j);
                dirty = true;
                break;
            }
        }
        if (!dirty) --i;
    }

    order_ = 1;
    for (const auto& lv : levels_) order_ *= lv.orbit.size();
}

bool StabChain::contains(const Perm& g) const {
    if (g.degree() != degree_) return false;
    auto [r, l] = sift(g);
    return l == levels_.size() && r.is_identity();
}

Perm StabChain::random_element(Rng& rng) const {
    Perm x(degree_);
    for (const auto& lv : levels_) {
        std::size_t k = rng() % lv.orbit.size();
        x = x * lv.transversal[k];
    }
    return x;
}

std::optional<Perm> StabChain::element_with_images(
    const std::function<int32_t(Point)>& prescribed) const {
    Perm g(degree_);
    Perm ginv(degree_);
    for (const auto& lv : levels_) {
        int32_t tau = prescribed(lv.base);
        if (tau < 0) break;  // remaining bases unconstrained
        Point p = ginv(static_cast<Point>(tau));
        if (lv.slot[p] < 0) return std::nullopt;
        g = g * lv.transversal[lv.slot[p]];
        ginv = g.inverse();
    }
    return g;
}

bool StabChain::for_each_element(const std::function<void(const Perm&)>& fn,
                                 std::uint64_t cap) const {
    if (order_ > cap) return false;
    if (levels_.empty()) { fn(Perm(degree_)); return true; }
    std::function<void(std::size_t, const Perm&)> rec = [&](std::size_t l, const Perm& acc) {
        if (l == levels_.size()) { fn(acc); return; }
        for (const auto& t : levels_[l].transversal) rec(l + 1, acc * t);
    };
    rec(0, Perm(degree_));
    return true;
}

Group::Group(std::vector<Perm> gens, std::vector<Point> preferred_base)
    : gens_(std::move(gens)), preferred_(std::move(preferred_base)) {
    for (const auto& g : gens_) {
        if (degree_ == 0) degree_ = g.degree();
        else if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
    }
    if (degree_ == 0) throw std::invalid_argument("group needs at least one generator (identity is fine)");
}

const StabChain& Group::chain() const {
    if (!chain_) chain_ = std::make_shared<StabChain>(gens_, preferred_);
    return *chain_;
}

bool Group::contains(const Group& h) const {
    for (const auto& g : h.generators())
        if (!contains(g)) return false;
    return true;
}

std::uint64_t Group::two_part() const {
    std::uint64_t n = order(), t = 1;
    while (n % 2 == 0) { n /= 2; t *= 2; }
    return t;
}

bool Group::is_abelian() const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        for (std::size_t j = i + 1; j < gens_.size(); ++j)
            if (!commutes(gens_[i], gens_[j])) return false;
    return true;
}

bool Group::is_elementary_abelian_2() const {
    if (!is_abelian()) return false;
    for (const auto& g : gens_)
        if (!(g * g).is_identity()) return false;
    return true;
}

std::vector<Point> Group::orbit(Point p) const {
    std::vector<Point> orb{p};
    std::vector<bool> seen(degree_, false);
    seen[p] = true;
    for (std::size_t i = 0; i < orb.size(); ++i)
        for (const auto& g : gens_) {
            Point q = g(orb[i]);
            if (!seen[q]) { seen[q] = true; orb.push_back(q); }
        }
    return orb;
}

std::vector<std::vector<Point>> Group::orbits() const {
    std::vector<bool> seen(degree_, false);
    std::vector<std::vector<Point>> out;
    for (std::size_t p = 0; p < degree_; ++p) {
        if (seen[p]) continue;
        auto orb = orbit(static_cast<Point>(p));
        for (auto q : orb) seen[q] = true;
        std::sort(orb.begin(), orb.end());
        out.push_back(std::move(orb));
    }
    return out;
}

std::vector<Perm> Group::elements(std::uint64_t cap) const {
    if (order() > cap) throw std::runtime_error("group too large to enumerate");
    std::vector<Perm> out;
    out.reserve(order());
    chain().for_each_element([&](const Perm& p) { out.push_back(p); }, cap);
    return out;
}

Group conjugate_group(const Group& h, const Perm& g) {
    std::vector<Perm> gens;
    gens.reserve(h.generators().size());
    for (const auto& x : h.generators()) gens.push_back(x.conjugated_by(g));
    if (gens.empty()) gens.push_back(Perm(h.degree()));
    return Group(std::move(gens));
}

}  // namespace coho::perm
