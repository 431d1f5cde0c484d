#pragma once

#include <string>
#include <vector>

#include "hmsl/exact/finite_field.hpp"
#include "hmsl/exact/rational.hpp"
#include "hmsl/mpoly/binary_quartic.hpp"

namespace hmsl {

// A point [t:u] of P^1 over F_q, normalized to u = 1 or [1:0].
struct FqRoot {
  FqElt t;
  FqElt u;
  int multiplicity = 1;

  bool at_infinity() const { return u.is_zero(); }
  std::string str() const { return "[" + t.str() + ":" + u.str() + "]"; }
};

// Reinterprets an element of F_p inside F_{p^2} (or returns it unchanged).
FqElt change_field(const FqElt& x, const Fq& target);

// Reduction of a rational quartic whose coefficients are p-integral.
BinaryQuartic<FqElt> reduce_quartic(const BinaryQuartic<Rational>& q, const Fq& field);

// All roots in P^1(field) with multiplicity, by exhaustive evaluation and
// deflation. Coefficients may live in the prime subfield of `field`.
// A zero form has every point as a root and is rejected.
std::vector<FqRoot> roots_over_Fq(const BinaryQuartic<FqElt>& q, const Fq& field);

}  // namespace hmsl
