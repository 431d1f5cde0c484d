#pragma once

#include <vector>

#include "hmsl/exact/finite_field.hpp"
#include "hmsl/mpoly/dense_poly.hpp"

namespace hmsl {

using FpPoly = DensePoly<FqElt>;

struct FpFactor {
  FpPoly poly;  // monic irreducible
  int multiplicity = 1;
};

// Complete factorization of a nonzero polynomial over a prime field F_p
// (p odd): squarefree decomposition, distinct-degree splitting, then
// equal-degree splitting with a deterministic sequence of trial
// polynomials. The leading coefficient is dropped. Factors are sorted by
// (degree, coefficients).
std::vector<FpFactor> factor_mod_p(const FpPoly& f);

}  // namespace hmsl
