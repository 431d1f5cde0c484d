#pragma once

#include <cstddef>

#include "hmsl/exact/rational.hpp"
#include "hmsl/mpoly/sparse_poly.hpp"

namespace hmsl {

// sigma_k in n variables: C(n,k) monomials, all with coefficient 1.
SparsePoly<Rational> elementary_symmetric(int k, std::size_t n = 6);

}  // namespace hmsl
