#include "coho/resolution.hpp"

#include <algorithm>
#include <stdexcept>

namespace coho::resol {

using gf2::BitMatrix;
using gf2::BitVec;
using gf2::SubspaceBasis;
using perm::Perm;

MinimalResolution::MinimalResolution(perm::Group p, std::size_t max_degree,
                                     std::uint64_t order_cap)
    : group_(std::move(p)) {
    std::uint64_t n = group_.order();
    if (n > order_cap)
        throw perm::ScaleError("resolution: group order exceeds the desk-scale cap");
    if ((n & (n - 1)) != 0)
        throw std::invalid_argument("resolution: group is not a 2-group");

    elements_ = group_.elements(order_cap);
    std::sort(elements_.begin(), elements_.end());
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i].is_identity()) id_idx_ = i;

    mtable_.resize(elements_.size() * elements_.size());
    for (std::size_t a = 0; a < elements_.size(); ++a)
        for (std::size_t b = 0; b < elements_.size(); ++b) {
            Perm prod = elements_[a] * elements_[b];
            auto it = std::lower_bound(elements_.begin(), elements_.end(), prod);
            mtable_[a * elements_.size() + b] =
                static_cast<std::uint32_t>(it - elements_.begin());
        }

    for (const auto& g : group_.generators()) {
        if (g.is_identity()) continue;
        gen_idx_.push_back(element_index(g));
    }

    ranks_.push_back(1);  // b_0 = 1
    extend(max_degree);
}

std::size_t MinimalResolution::element_index(const perm::Perm& x) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
    if (it == elements_.end() || !(*it == x))
        throw std::invalid_argument("element not in resolved group");
    return static_cast<std::size_t>(it - elements_.begin());
}

BitVec MinimalResolution::act(std::size_t e, const BitVec& v, std::size_t blocks) const {
    std::size_t n = elements_.size();
    BitVec w(v.size());
    for (std::size_t j = 0; j < blocks; ++j)
        for (std::size_t g = 0; g < n; ++g)
            if (v.get(j * n + g)) w.set(j * n + mtable_[e * n + g], true);
    return w;
}

BitVec MinimalResolution::collapse(const BitVec& v, std::size_t blocks) const {
    std::size_t n = elements_.size();
    BitVec c(blocks);
    for (std::size_t j = 0; j < blocks; ++j) {
        bool parity = false;
        for (std::size_t g = 0; g < n; ++g) parity ^= v.get(j * n + g);
        c.set(j, parity);
    }
    return c;
}

void MinimalResolution::extend(std::size_t new_max_degree) {
    while (ranks_.size() - 1 < new_max_degree) build_degree();
}

void MinimalResolution::build_degree() {
    std::size_t n = elements_.size();
    std::size_t cur = ranks_.size() - 1;  // have b_0..b_cur; build d_{cur+1}

    SubspaceBasis kernel;
    if (cur == 0) {
        // d_0 = augmentation: kernel spanned by g - 1.
        std::vector<BitVec> span;
        for (std::size_t g = 0; g < n; ++g) {
            if (g == id_idx_) continue;
            BitVec v(n);
            v.set(g, true);
            v.set(id_idx_, true);
            span.push_back(std::move(v));
        }
        kernel = SubspaceBasis::from_span(span, n);
    } else {
        kernel = gf2::nullspace_basis(diffs_[cur - 1]);
    }

    // J.K = span{(g-1)v : g group generators, v in a basis of K}. Minimal
    // module generators of K lift a basis of K/JK (Nakayama: F2[P] is local).
    std::vector<BitVec> jk;
    for (std::size_t i = 0; i < kernel.dim(); ++i) {
        BitVec v = kernel.basis_vector(i);
        for (auto gi : gen_idx_) jk.push_back(act(gi, v, ranks_[cur]) ^ v);
    }
    SubspaceBasis radical = SubspaceBasis::from_span(jk, kernel.ambient_dim());
    std::vector<BitVec> mingens = gf2::complement_in(kernel, radical);

    std::size_t b_next = mingens.size();
    BitMatrix d(ranks_[cur] * n, b_next * n);
    for (std::size_t j = 0; j < b_next; ++j)
        for (std::size_t g = 0; g < n; ++g) {
            BitVec col = act(g, mingens[j], ranks_[cur]);
            for (std::size_t r = 0; r < col.size(); ++r)
                if (col.get(r)) d.set(r, j * n + g, true);
        }
    diffs_.push_back(std::move(d));
    ranks_.push_back(b_next);
    top_kernel_gens_ = std::move(mingens);
}

// ---------------------------------------------------------------------------

struct PGroupCohomology::Lift {
    std::size_t degree = 0;      // degree of the lifted cocycle
    std::vector<BitMatrix> phi;  // phi[k]: F_{degree+k} -> F_k
    std::vector<BitMatrix> mult; // mult[k]: H^k -> H^{k+degree}
};

PGroupCohomology::PGroupCohomology(perm::Group p, std::size_t max_degree, std::uint64_t cap)
    : res_(std::make_shared<MinimalResolution>(std::move(p), max_degree, cap)) {}

void PGroupCohomology::extend(std::size_t new_max_degree) {
    if (new_max_degree <= res_->max_degree()) return;
    res_->extend(new_max_degree);
    lifts_.clear();  // lifts are degree-bounded; rebuilt lazily
}

Cocycle PGroupCohomology::one() const {
    BitVec v(1);
    v.set(0, true);
    return Cocycle{0, v};
}

namespace {
// Column (j, identity) of a block matrix, as the image of module generator j.
BitVec generator_column(const BitMatrix& m, std::size_t j, std::size_t n, std::size_t id_idx) {
    BitVec col(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (m.get(r, j * n + id_idx)) col.set(r, true);
    return col;
}
}  // namespace

PGroupCohomology::Lift& PGroupCohomology::lift_for(const Cocycle& x) const {
    auto key = std::make_pair(x.degree, x.coords.words());
    auto it = lifts_.find(key);
    if (it != lifts_.end()) return *it->second;

    auto lf = std::make_shared<Lift>();
    std::size_t d = x.degree;
    std::size_t n = res_->group_order();
    std::size_t top = res_->max_degree();
    lf->degree = d;

    {
        // phi_0 : F_d -> F_0, e_j -> x_j * 1.
        BitMatrix m(res_->rank(0) * n, res_->rank(d) * n);
        for (std::size_t j = 0; j < res_->rank(d); ++j) {
            if (!x.coords.get(j)) continue;
            for (std::size_t g = 0; g < n; ++g) m.set(g, j * n + g, true);
        }
        lf->phi.push_back(std::move(m));
    }
    for (std::size_t k = 1; d + k <= top; ++k) {
        const BitMatrix& dk = res_->differential(k);
        const BitMatrix& dsrc = res_->differential(d + k);
        std::size_t b_src = res_->rank(d + k);
        std::vector<BitVec> cols(b_src);
        for (std::size_t j = 0; j < b_src; ++j) {
            BitVec rhs = lf->phi[k - 1].apply(
                generator_column(dsrc, j, n, res_->identity_index()));
            auto sol = gf2::solve_linear(dk, rhs);
            if (!sol) throw std::logic_error("chain lift failed");
            cols[j] = std::move(*sol);
        }
        BitMatrix m(res_->rank(k) * n, b_src * n);
        for (std::size_t j = 0; j < b_src; ++j)
            for (std::size_t g = 0; g < n; ++g) {
                BitVec cv = res_->act(g, cols[j], res_->rank(k));
                for (std::size_t r = 0; r < cv.size(); ++r)
                    if (cv.get(r)) m.set(r, j * n + g, true);
            }
        lf->phi.push_back(std::move(m));
    }

    for (std::size_t k = 0; d + k <= top; ++k) {
        std::size_t b_src = res_->rank(d + k), b_tgt = res_->rank(k);
        BitMatrix mult(b_src, b_tgt);
        for (std::size_t j = 0; j < b_src; ++j) {
            BitVec col = generator_column(lf->phi[k], j, n, res_->identity_index());
            BitVec c = res_->collapse(col, b_tgt);
            for (std::size_t i = 0; i < b_tgt; ++i)
                if (c.get(i)) mult.set(j, i, true);
        }
        lf->mult.push_back(std::move(mult));
    }

    auto [pos, inserted] = lifts_.emplace(std::move(key), lf);
    (void)inserted;
    return *pos->second;
}

const BitMatrix& PGroupCohomology::mult_matrix(const Cocycle& x, std::size_t k) const {
    return lift_for(x).mult.at(k);
}

Cocycle PGroupCohomology::cup(const Cocycle& x, const Cocycle& y) const {
    if (x.degree + y.degree > res_->max_degree())
        throw std::invalid_argument("cup: degree exceeds resolution bound");
    const BitMatrix& m = mult_matrix(x, y.degree);
    return Cocycle{x.degree + y.degree, m.apply(y.coords)};
}

Cocycle PGroupCohomology::product(const std::vector<Cocycle>& factors) const {
    Cocycle acc = one();
    for (const auto& f : factors) acc = cup(f, acc);
    return acc;
}

// ---------------------------------------------------------------------------

std::vector<BitMatrix> induced_map(const perm::Hom& psi, const MinimalResolution& rp,
                                   const MinimalResolution& rq, std::size_t n) {
    if (n > rp.max_degree() || n > rq.max_degree())
        throw std::invalid_argument("induced_map: resolutions too short");
    std::size_t np = rp.group_order(), nq = rq.group_order();

    std::vector<std::size_t> pimg(np);
    for (std::size_t e = 0; e < np; ++e)
        pimg[e] = rq.element_index(psi.apply(rp.elements()[e]));

    // psi-equivariant chain map lambda_k : F^P_k -> F^Q_k, lifted degree by
    // degree; full matrix columns (j, g) = act_Q(psi(g), lambda_k(e_j)).
    std::vector<BitMatrix> lambda;
    std::vector<std::vector<BitVec>> gen_images;
    {
        BitMatrix m(rq.rank(0) * nq, rp.rank(0) * np);
        for (std::size_t g = 0; g < np; ++g) m.set(pimg[g], g, true);
        lambda.push_back(std::move(m));
        BitVec one(nq);
        one.set(rq.identity_index(), true);
        gen_images.push_back({one});
    }
    for (std::size_t k = 1; k <= n; ++k) {
        const BitMatrix& dq = rq.differential(k);
        const BitMatrix& dp = rp.differential(k);
        std::size_t b_src = rp.rank(k);
        std::vector<BitVec> cols(b_src);
        for (std::size_t j = 0; j < b_src; ++j) {
            BitVec col(dp.rows());
            for (std::size_t r = 0; r < dp.rows(); ++r)
                if (dp.get(r, j * np + rp.identity_index())) col.set(r, true);
            BitVec rhs = lambda[k - 1].apply(col);
            auto sol = gf2::solve_linear(dq, rhs);
            if (!sol) throw std::logic_error("induced chain map lift failed");
            cols[j] = std::move(*sol);
        }
        BitMatrix m(rq.rank(k) * nq, b_src * np);
        for (std::size_t j = 0; j < b_src; ++j)
            for (std::size_t g = 0; g < np; ++g) {
                BitVec cv = rq.act(pimg[g], cols[j], rq.rank(k));
                for (std::size_t r = 0; r < cv.size(); ++r)
                    if (cv.get(r)) m.set(r, j * np + g, true);
            }
        gen_images.push_back(std::move(cols));
        lambda.push_back(std::move(m));
    }

    std::vector<BitMatrix> out;
    for (std::size_t k = 0; k <= n; ++k) {
        std::size_t b_p = rp.rank(k), b_q = rq.rank(k);
        BitMatrix m(b_p, b_q);
        for (std::size_t j = 0; j < b_p; ++j) {
            BitVec c = rq.collapse(gen_images[k][j], b_q);
            for (std::size_t i = 0; i < b_q; ++i)
                if (c.get(i)) m.set(j, i, true);
        }
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace coho::resol
