#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "coho/group_io.hpp"
#include "coho/resolution.hpp"

using namespace coho;
using perm::Group;
using perm::read_group_string;
using resol::Cocycle;
using resol::MinimalResolution;
using resol::PGroupCohomology;

namespace {

Group C2() { return read_group_string("degree 2\n(0 1)\n"); }
Group C4() { return read_group_string("degree 4\n(0 1 2 3)\n"); }
Group V4() { return read_group_string("degree 4\n(0 1)(2 3)\n(0 2)(1 3)\n"); }
Group D8() { return read_group_string("degree 4\n(0 1 2 3)\n(0 2)\n"); }
Group Q8() { return read_group_string("degree 8\n(0 1 2 3)(4 5 6 7)\n(0 4 2 6)(1 7 3 5)\n"); }

Cocycle basis_vec(std::size_t degree, std::size_t dim, std::size_t i) {
    gf2::BitVec v(dim);
    v.set(i, true);
    return Cocycle{degree, v};
}

// Independent oracle for cohomology dimensions: build a free (not minimal)
// resolution by taking full kernels, dualize, and compute kernel/image ranks
// of the dual maps. Shares only the raw bit-matrix layer with the
// implementation under test.
std::vector<std::size_t> dual_complex_dims(const Group& p, std::size_t maxdeg) {
    auto elems = p.elements(512);
    std::sort(elems.begin(), elems.end());
    std::size_t n = elems.size();
    auto idx_of = [&](const perm::Perm& x) {
        return std::size_t(std::lower_bound(elems.begin(), elems.end(), x) - elems.begin());
    };
    std::size_t id_idx = idx_of(perm::Perm(p.degree()));
    std::vector<std::size_t> mult(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) mult[a * n + b] = idx_of(elems[a] * elems[b]);

    auto act = [&](std::size_t e, const gf2::BitVec& v, std::size_t blocks) {
        gf2::BitVec w(v.size());
        for (std::size_t j = 0; j < blocks; ++j)
            for (std::size_t g = 0; g < n; ++g)
                if (v.get(j * n + g)) w.set(j * n + mult[e * n + g], true);
        return w;
    };

    std::vector<std::size_t> ranks{1};
    std::vector<gf2::BitMatrix> diffs;
    gf2::SubspaceBasis kernel;
    {
        std::vector<gf2::BitVec> span;
        for (std::size_t g = 0; g < n; ++g) {
            if (g == id_idx) continue;
            gf2::BitVec v(n);
            v.set(g, true);
            v.set(id_idx, true);
            span.push_back(v);
        }
        kernel = gf2::SubspaceBasis::from_span(span, n);
    }
    for (std::size_t deg = 1; deg <= maxdeg + 1; ++deg) {
        std::size_t b = kernel.dim();  // every kernel basis vector becomes a generator
        gf2::BitMatrix d(ranks.back() * n, b * n);
        for (std::size_t j = 0; j < b; ++j)
            for (std::size_t g = 0; g < n; ++g) {
                gf2::BitVec col = act(g, kernel.basis_vector(j), ranks.back());
                for (std::size_t r = 0; r < col.size(); ++r)
                    if (col.get(r)) d.set(r, j * n + g, true);
            }
        kernel = gf2::nullspace_basis(d);
        diffs.push_back(std::move(d));
        ranks.push_back(b);
    }

    auto collapse = [&](const gf2::BitVec& v, std::size_t blocks) {
        gf2::BitVec c(blocks);
        for (std::size_t j = 0; j < blocks; ++j) {
            bool parity = false;
            for (std::size_t g = 0; g < n; ++g) parity ^= v.get(j * n + g);
            c.set(j, parity);
        }
        return c;
    };
    std::vector<gf2::BitMatrix> dual;
    for (std::size_t k = 0; k < diffs.size(); ++k) {
        std::size_t src = ranks[k], tgt = ranks[k + 1];
        gf2::BitMatrix m(tgt, src);
        for (std::size_t j = 0; j < tgt; ++j) {
            gf2::BitVec col(diffs[k].rows());
            for (std::size_t r = 0; r < diffs[k].rows(); ++r)
                if (diffs[k].get(r, j * n + id_idx)) col.set(r, true);
            gf2::BitVec c = collapse(col, src);
            for (std::size_t i = 0; i < src; ++i)
                if (c.get(i)) m.set(j, i, true);
        }
        dual.push_back(std::move(m));
    }

    std::vector<std::size_t> dims;
    for (std::size_t k = 0; k <= maxdeg; ++k) {
        std::size_t ker = gf2::nullspace_basis(dual[k]).dim();
        std::size_t im_prev = (k == 0) ? 0 : dual[k - 1].rank();
        dims.push_back(ker - im_prev);
    }
    return dims;
}

}  // namespace

TEST_CASE("ranks of cyclic and elementary abelian groups") {
    MinimalResolution r2(C2(), 8);
    for (std::size_t k = 0; k <= 8; ++k) CHECK(r2.rank(k) == 1);

    MinimalResolution r4(C4(), 8);
    for (std::size_t k = 0; k <= 8; ++k) CHECK(r4.rank(k) == 1);

    MinimalResolution rv(V4(), 8);
    for (std::size_t k = 0; k <= 8; ++k) CHECK(rv.rank(k) == k + 1);  // 1/(1-t)^2
}

TEST_CASE("ranks of D8 and Q8") {
    MinimalResolution rd(D8(), 8);
    for (std::size_t k = 0; k <= 8; ++k) CHECK(rd.rank(k) == k + 1);

    MinimalResolution rq(Q8(), 9);
    std::vector<std::size_t> expect{1, 2, 2, 1, 1, 2, 2, 1, 1, 2};  // period 4
    for (std::size_t k = 0; k <= 9; ++k) CHECK(rq.rank(k) == expect[k]);
}

TEST_CASE("d compose d is zero and image lies in the radical") {
    for (auto g : {C4(), V4(), D8(), Q8()}) {
        MinimalResolution r(g, 5);
        for (std::size_t k = 2; k <= 5; ++k) {
            auto prod = r.differential(k - 1).mul(r.differential(k));
            CHECK(prod == gf2::BitMatrix(prod.rows(), prod.cols()));
        }
        // minimality: every differential column collapses to zero
        for (std::size_t k = 1; k <= 5; ++k) {
            const auto& d = r.differential(k);
            for (std::size_t c = 0; c < d.cols(); ++c) {
                gf2::BitVec col(d.rows());
                for (std::size_t row = 0; row < d.rows(); ++row)
                    if (d.get(row, c)) col.set(row, true);
                CHECK(r.collapse(col, r.rank(k - 1)).is_zero());
            }
        }
    }
}

TEST_CASE("minimal ranks agree with the dual-complex oracle") {
    for (auto g : {C2(), C4(), V4(), D8(), Q8()}) {
        MinimalResolution r(g, 6);
        auto oracle = dual_complex_dims(g, 6);
        for (std::size_t k = 0; k <= 6; ++k) CHECK(r.rank(k) == oracle[k]);
    }
}

TEST_CASE("cup products in H*(C2)") {
    PGroupCohomology h(C2(), 10);
    auto x = basis_vec(1, 1, 0);
    CHECK(h.cup(x, h.one()) == x);
    Cocycle acc = h.one();
    for (int k = 1; k <= 10; ++k) {
        acc = h.cup(x, acc);
        CHECK_FALSE(acc.is_zero());
    }
}

TEST_CASE("cup products in H*(V4) commute and are associative") {
    PGroupCohomology h(V4(), 9);
    auto x = basis_vec(1, 2, 0), y = basis_vec(1, 2, 1);
    CHECK(h.cup(x, y) == h.cup(y, x));
    CHECK(h.cup(h.cup(x, y), x) == h.cup(x, h.cup(y, x)));
    Cocycle p = h.one();
    for (int k = 0; k < 9; ++k) {
        p = h.cup(x, p);
        CHECK_FALSE(p.is_zero());
    }
}

TEST_CASE("H*(C4): degree-1 generator squares to zero") {
    PGroupCohomology h(C4(), 8);
    auto x = basis_vec(1, 1, 0);
    CHECK(h.cup(x, x).is_zero());
    auto w = basis_vec(2, 1, 0);
    CHECK_FALSE(h.cup(w, w).is_zero());
    CHECK_FALSE(h.cup(w, x).is_zero());
}

TEST_CASE("induced maps: identity, C2 into C4, functoriality") {
    auto v4 = V4();
    MinimalResolution rv(v4, 6);
    auto id = perm::Hom::identity(v4);
    auto mats = resol::induced_map(id, rv, rv, 6);
    for (std::size_t k = 0; k <= 6; ++k) CHECK(mats[k] == gf2::BitMatrix::identity(rv.rank(k)));

    // inclusion C2 -> C4: H^1 restriction zero, H^2 restriction nonzero
    auto c4 = C4();
    auto sub = read_group_string("degree 4\n(0 2)(1 3)\n");
    MinimalResolution rsub(sub, 6), rc4(c4, 6);
    perm::Hom incl(sub, sub.generators(), 4);
    auto rest = resol::induced_map(incl, rsub, rc4, 6);
    CHECK(rest[1] == gf2::BitMatrix(1, 1));  // zero map
    CHECK(rest[2] == gf2::BitMatrix::identity(1));

    // the two inclusions of C2 into V4 give distinct H^1 maps
    auto c2a = read_group_string("degree 4\n(0 1)(2 3)\n");
    auto c2b = read_group_string("degree 4\n(0 2)(1 3)\n");
    MinimalResolution ra(c2a, 4), rb(c2b, 4);
    perm::Hom ia(c2a, c2a.generators(), 4), ib(c2b, c2b.generators(), 4);
    auto ma = resol::induced_map(ia, ra, rv, 4);
    auto mb = resol::induced_map(ib, rb, rv, 4);
    CHECK(ma[1] != mb[1]);

    // contravariant functoriality on conjugations inside D8
    auto d8 = D8();
    MinimalResolution rd(d8, 5);
    perm::Perm g = perm::Perm::from_cycles("(0 1 2 3)", 4);
    auto cg = perm::Hom::conjugation(d8, g);
    auto m1 = resol::induced_map(cg, rd, rd, 5);
    auto composed = cg.after(cg);
    auto mc = resol::induced_map(composed, rd, rd, 5);
    for (std::size_t k = 0; k <= 5; ++k) CHECK(mc[k] == m1[k].mul(m1[k]));
}

TEST_CASE("scale and non-2-group errors") {
    auto s3 = read_group_string("degree 3\n(0 1)\n(0 1 2)\n");
    CHECK_THROWS_AS(MinimalResolution(s3, 3), std::invalid_argument);
    CHECK_THROWS_AS(MinimalResolution(C4(), 3, 2), perm::ScaleError);
}
