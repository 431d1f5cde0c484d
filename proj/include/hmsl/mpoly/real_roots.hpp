#pragma once

#include "hmsl/exact/rational.hpp"
#include "hmsl/mpoly/binary_quartic.hpp"
#include "hmsl/mpoly/dense_poly.hpp"

namespace hmsl {

// Number of distinct real roots of a nonzero polynomial, by an exact
// Sturm sequence.
int sturm_root_count(const DensePoly<Rational>& f);

// Distinct real projective roots of a squarefree quartic; [1:0] counts
// when c4 = 0. Throws DomainError for degenerate or non-squarefree input.
int real_root_count(const BinaryQuartic<Rational>& q);

// Number of real roots of f in the half-open interval (lo, hi].
int sturm_count_in(const DensePoly<Rational>& f, const Rational& lo, const Rational& hi);

}  // namespace hmsl
