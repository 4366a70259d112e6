// Hilbert series of graded quotients from leading-term data, and recovery of
// closed-form numerators over products (1 - t^{d_i}).
#pragma once

#include <cstdint>
#include <vector>

#include "coho/groebner.hpp"

namespace coho::ring {

struct HilbertData {
    std::vector<std::int64_t> coefficients;  // a_0..a_D

    std::int64_t at(std::size_t k) const {
        return k < coefficients.size() ? coefficients[k] : 0;
    }
    /// Largest k with a_k != 0, or -1 for the zero series.
    std::ptrdiff_t top_degree() const;
};

/// a_k = number of standard monomials of degree k, 0 <= k <= d. Requires
/// gb.truncation >= d (coefficients beyond the truncation are not canonical).
HilbertData hilbert_coefficients(const PolyRing& ring, const GroebnerData& gb, std::size_t d);

struct ClosedForm {
    std::vector<std::int64_t> numerator;  // coefficients of f(t), degree = last nonzero
    std::size_t degree = 0;
    bool palindromic = false;
    /// True when the numerator's support stays strictly inside the window, so
    /// the window determines it.
    bool determined = false;

    std::vector<std::int64_t> nonzero_coefficients() const;
};

/// f(t) = (sum a_k t^k) * prod_i (1 - t^{d_i}), truncated to the window of h.
ClosedForm closed_form_match(const HilbertData& h, const std::vector<std::size_t>& denominator_degrees);

/// Expansion of f(t) / prod (1 - t^{d_i}) through degree d.
std::vector<std::int64_t> expand_rational(const std::vector<std::int64_t>& numerator,
                                          const std::vector<std::size_t>& denominator_degrees,
                                          std::size_t d);

}  // namespace coho::ring
