// Dickson invariants of GL_r(F2) in F2[x_1..x_r].
#pragma once

#include <vector>

#include "coho/polynomial.hpp"

namespace coho::ring {

/// The rank-r ring F2[x_1..x_r] with unit-degree generators x0..x{r-1}.
PolyRing dickson_ring(std::size_t r);

/// Dickson invariants c_{r,i}, degrees 2^r - 2^i for i = r-1 .. 0, i.e.
/// degrees 2^{r-1}, ..., 2^r - 2, 2^r - 1 in increasing order.
std::vector<Polynomial> dickson_invariants(std::size_t r);

/// Substitutes an invertible matrix over F2 into a polynomial of
/// dickson_ring(r): x_j -> sum_i m[i][j] x_i.
Polynomial apply_gl_substitution(const PolyRing& ring, const Polynomial& p,
                                 const std::vector<std::vector<int>>& m);

/// All invertible r x r matrices over F2 (use only for r <= 4).
std::vector<std::vector<std::vector<int>>> all_gl_matrices(std::size_t r);

}  // namespace coho::ring
