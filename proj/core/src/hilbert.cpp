#include "coho/hilbert.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace coho::ring {

std::ptrdiff_t HilbertData::top_degree() const {
    for (std::size_t k = coefficients.size(); k-- > 0;)
        if (coefficients[k]) return static_cast<std::ptrdiff_t>(k);
    return -1;
}

HilbertData hilbert_coefficients(const PolyRing& ring, const GroebnerData& gb, std::size_t d) {
    if (gb.truncation < d)
        throw std::invalid_argument("hilbert_coefficients: truncation below requested degree");
    std::size_t n = ring.ngens();
    auto lts = gb.leading_terms();

    // Bucket leading terms by their largest-index support variable; during the
    // DFS over exponent vectors, divisibility only needs checking against the
    // bucket of the variable just assigned.
    std::vector<std::vector<const Monomial*>> bucket(n);
    for (const auto& lt : lts) {
        if (lt.is_one()) {  // ideal is everything
            HilbertData h;
            h.coefficients.assign(d + 1, 0);
            return h;
        }
        std::size_t maxv = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (lt.e[i]) maxv = i;
        bucket[maxv].push_back(&lt);
    }

    HilbertData h;
    h.coefficients.assign(d + 1, 0);
    std::vector<std::uint16_t> exp(n, 0);

    // DFS over variables in listing order; prune when the partial monomial is
    // divisible by a leading term supported in the assigned variables.
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t deg) {
        if (i == n) {
            h.coefficients[deg] += 1;
            return;
        }
        std::size_t w = ring.degree_of(i);
        for (std::uint16_t e = 0;; ++e) {
            std::size_t nd = deg + e * w;
            if (nd > d) break;
            exp[i] = e;
            bool divisible = false;
            for (const Monomial* lt : bucket[i]) {
                bool div = true;
                for (std::size_t v = 0; v <= i && div; ++v)
                    if (lt->e[v] > exp[v]) div = false;
                if (div) { divisible = true; break; }
            }
            if (!divisible) rec(i + 1, nd);
        }
        exp[i] = 0;
    };
    rec(0, 0);
    return h;
}

std::vector<std::int64_t> ClosedForm::nonzero_coefficients() const {
    std::vector<std::int64_t> out;
    for (auto c : numerator)
        if (c) out.push_back(c);
    return out;
}

ClosedForm closed_form_match(const HilbertData& h,
                             const std::vector<std::size_t>& denominator_degrees) {
    ClosedForm out;
    std::size_t window = h.coefficients.size();
    if (window == 0) throw std::invalid_argument("closed_form_match: empty window");
    std::vector<std::int64_t> f = h.coefficients;
    for (auto deg : denominator_degrees) {
        std::vector<std::int64_t> next(window, 0);
        for (std::size_t k = 0; k < window; ++k) {
            next[k] += f[k];
            if (k + deg < window) next[k + deg] -= f[k];
        }
        f = std::move(next);
    }
    std::size_t top = 0;
    bool any = false;
    for (std::size_t k = 0; k < window; ++k)
        if (f[k]) { top = k; any = true; }
    out.degree = any ? top : 0;
    out.determined = !any || top + 1 < window;
    f.resize(any ? top + 1 : 1);
    out.palindromic = true;
    for (std::size_t k = 0; k < f.size(); ++k)
        if (f[k] != f[f.size() - 1 - k]) { out.palindromic = false; break; }
    out.numerator = std::move(f);
    return out;
}

std::vector<std::int64_t> expand_rational(const std::vector<std::int64_t>& numerator,
                                          const std::vector<std::size_t>& denominator_degrees,
                                          std::size_t d) {
    std::vector<std::int64_t> a(d + 1, 0);
    for (std::size_t k = 0; k <= d && k < numerator.size(); ++k) a[k] = numerator[k];
    for (auto deg : denominator_degrees) {
        // multiply by 1/(1-t^deg): a_k += a_{k-deg}
        for (std::size_t k = deg; k <= d; ++k) a[k] += a[k - deg];
    }
    return a;
}

}  // namespace coho::ring
