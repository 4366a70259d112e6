#include "coho/groebner.hpp"

#include <algorithm>
#include <queue>

namespace coho::ring {

namespace {

struct Pair {
    std::uint32_t deg;
    std::uint32_t i, j;
    bool operator<(const Pair& o) const { return deg > o.deg; }  // min-heap
};

struct Basis {
    const PolyRing& ring;
    std::vector<Polynomial> polys;
    std::vector<bool> live;

    explicit Basis(const PolyRing& r) : ring(r) {}

    // Index of a live divisor of m, or -1.
    int find_divisor(const Monomial& m) const {
        for (std::size_t i = 0; i < polys.size(); ++i) {
            if (!live[i]) continue;
            const Monomial& lt = polys[i].leading();
            if (lt.deg <= m.deg && PolyRing::mono_divides(lt, m)) return static_cast<int>(i);
        }
        return -1;
    }

    Polynomial reduce(Polynomial p) const {
        std::vector<Monomial> out;
        while (!p.is_zero()) {
            int d = find_divisor(p.leading());
            if (d < 0) {
                out.push_back(p.leading());
                p.terms.erase(p.terms.begin());
            } else {
                Monomial q = ring.mono_div(p.leading(), polys[d].leading());
                p = ring.add(p, ring.mul_mono(polys[d], q));
            }
        }
        Polynomial r;
        r.terms = std::move(out);
        return r;
    }
};

}  // namespace

GroebnerData groebner_extend(const PolyRing& ring, GroebnerData gb,
                             std::vector<Polynomial> extra, std::size_t degree) {
    Basis basis(ring);
    std::priority_queue<Pair> pairs;
    std::vector<Polynomial> to_insert = std::move(extra);

    auto push_pairs_for = [&](std::uint32_t n) {
        for (std::uint32_t i = 0; i < n; ++i) {
            if (!basis.live[i]) continue;
            const Monomial &a = basis.polys[i].leading(), &b = basis.polys[n].leading();
            if (PolyRing::mono_coprime(a, b)) continue;  // product criterion
            Monomial l = ring.mono_lcm(a, b);
            if (l.deg > degree) continue;
            pairs.push({l.deg, i, n});
        }
    };

    // Seed with the existing basis; pairs in (gb.truncation, degree] must be
    // (re)examined when the truncation grows.
    for (auto& p : gb.basis) {
        basis.polys.push_back(std::move(p));
        basis.live.push_back(true);
    }
    for (std::uint32_t j = 1; j < basis.polys.size(); ++j)
        for (std::uint32_t i = 0; i < j; ++i) {
            const Monomial &a = basis.polys[i].leading(), &b = basis.polys[j].leading();
            if (PolyRing::mono_coprime(a, b)) continue;
            Monomial l = ring.mono_lcm(a, b);
            if (l.deg > degree || l.deg <= gb.truncation) continue;
            pairs.push({l.deg, i, j});
        }

    auto insert_poly = [&](Polynomial p) {
        p = basis.reduce(std::move(p));
        if (p.is_zero()) return;
        std::uint32_t n = static_cast<std::uint32_t>(basis.polys.size());
        // Retire basis elements whose leading term the new one divides; their
        // reduced forms re-enter the queue.
        for (std::uint32_t i = 0; i < n; ++i) {
            if (!basis.live[i]) continue;
            if (PolyRing::mono_divides(p.leading(), basis.polys[i].leading())) {
                basis.live[i] = false;
                to_insert.push_back(basis.polys[i]);
            }
        }
        basis.polys.push_back(std::move(p));
        basis.live.push_back(true);
        push_pairs_for(n);
    };

    while (!to_insert.empty() || !pairs.empty()) {
        if (!to_insert.empty()) {
            Polynomial p = std::move(to_insert.back());
            to_insert.pop_back();
            insert_poly(std::move(p));
            continue;
        }
        Pair pr = pairs.top();
        pairs.pop();
        if (!basis.live[pr.i] || !basis.live[pr.j]) continue;
        const Polynomial &f = basis.polys[pr.i], &g = basis.polys[pr.j];
        Monomial l = ring.mono_lcm(f.leading(), g.leading());
        if (l.deg > degree) continue;
        Polynomial s = ring.add(ring.mul_mono(f, ring.mono_div(l, f.leading())),
                                ring.mul_mono(g, ring.mono_div(l, g.leading())));
        s = basis.reduce(std::move(s));
        if (!s.is_zero()) insert_poly(std::move(s));
    }

    GroebnerData out;
    out.truncation = degree;
    // Final tail-reduction for canonical output.
    for (std::size_t i = 0; i < basis.polys.size(); ++i) {
        if (!basis.live[i]) continue;
        Polynomial lead;
        lead.terms.push_back(basis.polys[i].leading());
        Polynomial tail = basis.polys[i];
        tail.terms.erase(tail.terms.begin());
        basis.live[i] = false;  // reduce tail against the others only
        tail = basis.reduce(std::move(tail));
        basis.live[i] = true;
        out.basis.push_back(ring.add(lead, tail));
    }
    std::sort(out.basis.begin(), out.basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ring.mono_less(a.leading(), b.leading());
    });
    return out;
}

GroebnerData groebner_truncated(const PolyRing& ring, std::vector<Polynomial> relations,
                                std::size_t degree) {
    GroebnerData empty;
    empty.truncation = degree;
    return groebner_extend(ring, std::move(empty), std::move(relations), degree);
}

Polynomial normal_form(const PolyRing& ring, Polynomial p, const GroebnerData& gb) {
    Basis basis(ring);
    for (const auto& q : gb.basis) {
        basis.polys.push_back(q);
        basis.live.push_back(true);
    }
    return basis.reduce(std::move(p));
}

}  // namespace coho::ring
