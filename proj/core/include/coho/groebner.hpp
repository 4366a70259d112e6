// Degree-truncated Buchberger over F2. For homogeneous input, processing all
// S-polynomials of degree <= d makes normal forms canonical through degree d.
#pragma once

#include <cstddef>
#include <vector>

#include "coho/polynomial.hpp"

namespace coho::ring {

struct GroebnerData {
    std::vector<Polynomial> basis;  // inter-reduced, leading terms distinct
    std::size_t truncation = 0;     // all S-pairs of degree <= this processed

    std::vector<Monomial> leading_terms() const {
        std::vector<Monomial> lt;
        lt.reserve(basis.size());
        for (const auto& p : basis) lt.push_back(p.leading());
        return lt;
    }
};

GroebnerData groebner_truncated(const PolyRing& ring, std::vector<Polynomial> relations,
                                std::size_t degree);

/// Extends an existing truncated basis with extra relations and/or a larger
/// truncation degree.
GroebnerData groebner_extend(const PolyRing& ring, GroebnerData gb,
                             std::vector<Polynomial> extra, std::size_t degree);

/// Fully reduced normal form modulo the basis (canonical below the
/// truncation degree).
Polynomial normal_form(const PolyRing& ring, Polynomial p, const GroebnerData& gb);

}  // namespace coho::ring
