#include "coho/dickson.hpp"

#include <stdexcept>
#include <string>

namespace coho::ring {

PolyRing dickson_ring(std::size_t r) {
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < r; ++i)
        gens.push_back({"x" + std::to_string(i), 1, 'b'});
    return PolyRing(std::move(gens));
}

std::vector<Polynomial> dickson_invariants(std::size_t r) {
    if (r == 0) throw std::invalid_argument("dickson_invariants: r >= 1");
    PolyRing ring = dickson_ring(r);

    // f(X) = prod_{v in F2^r} (X + v.x) = X^{2^r} + sum_i c_{r,i} X^{2^i}.
    // Track coefficients of X^k while multiplying the linear factors.
    std::size_t n = std::size_t{1} << r;
    std::vector<Polynomial> coeff(n + 1);  // coeff[k] of X^k
    coeff[0] = ring.poly_one();
    std::size_t cur_deg = 0;
    for (std::size_t v = 0; v < n; ++v) {
        // linear form L_v = sum_{i: bit i of v} x_i
        std::vector<Monomial> monos;
        for (std::size_t i = 0; i < r; ++i)
            if ((v >> i) & 1) monos.push_back(ring.variable(i));
        Polynomial lv = ring.from_monomials(std::move(monos));
        // multiply running polynomial by (X + L_v)
        std::vector<Polynomial> next(n + 1);
        for (std::size_t k = 0; k <= cur_deg; ++k) {
            if (coeff[k].is_zero()) continue;
            next[k + 1] = ring.add(next[k + 1], coeff[k]);
            if (!lv.is_zero()) next[k] = ring.add(next[k], ring.mul(coeff[k], lv));
        }
        coeff = std::move(next);
        ++cur_deg;
    }

    std::vector<Polynomial> out;
    for (std::size_t i = r; i-- > 0;) {  // degrees 2^r - 2^{r-1} .. 2^r - 1
        out.push_back(coeff[std::size_t{1} << i]);
        if (out.back().is_zero() || out.back().degree() != n - (std::size_t{1} << i))
            throw std::logic_error("dickson invariant has unexpected degree");
    }
    // All other coefficients vanish; a cheap structural self-check.
    for (std::size_t k = 0; k < n; ++k) {
        bool is_power = (k & (k - 1)) == 0 && k != 0;
        if (!is_power && k != 0 && !coeff[k].is_zero())
            throw std::logic_error("non-additive coefficient in Dickson product");
    }
    return out;
}

Polynomial apply_gl_substitution(const PolyRing& ring, const Polynomial& p,
                                 const std::vector<std::vector<int>>& m) {
    std::size_t r = ring.ngens();
    std::vector<Polynomial> images(r);
    for (std::size_t j = 0; j < r; ++j) {
        std::vector<Monomial> monos;
        for (std::size_t i = 0; i < r; ++i)
            if (m[i][j]) monos.push_back(ring.variable(i));
        images[j] = ring.from_monomials(std::move(monos));
    }
    return ring.substitute(p, images);
}

std::vector<std::vector<std::vector<int>>> all_gl_matrices(std::size_t r) {
    std::vector<std::vector<std::vector<int>>> out;
    std::size_t total = std::size_t{1} << (r * r);
    for (std::size_t bits = 0; bits < total; ++bits) {
        std::vector<std::vector<int>> m(r, std::vector<int>(r, 0));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) m[i][j] = (bits >> (i * r + j)) & 1;
        // invertibility over F2 by elimination
        auto a = m;
        bool invertible = true;
        std::size_t rank = 0;
        for (std::size_t c = 0; c < r && invertible; ++c) {
            std::size_t piv = rank;
            while (piv < r && !a[piv][c]) ++piv;
            if (piv == r) { invertible = false; break; }
            std::swap(a[rank], a[piv]);
            for (std::size_t i2 = 0; i2 < r; ++i2)
                if (i2 != rank && a[i2][c])
                    for (std::size_t j2 = 0; j2 < r; ++j2) a[i2][j2] ^= a[rank][j2];
            ++rank;
        }
        if (invertible && rank == r) out.push_back(std::move(m));
    }
    return out;
}

}  // namespace coho::ring
