#pragma once

#include <string>
#include <vector>

#include "hmsl/exact/rational.hpp"
#include "hmsl/mpoly/binary_quartic.hpp"
#include "hmsl/mpoly/int_forms.hpp"

namespace hmsl {

enum class GaloisLabel { S4, A4, D4, V4, C4, C2, C1, ReducibleComposite };

std::string to_string(GaloisLabel label);

struct QuarticGaloisGroup {
  GaloisLabel label = GaloisLabel::C1;
  int order = 1;                    // order of the group acting on the roots
  std::vector<int> factor_degrees;  // degrees over Q, ascending
  bool solvable() const { return true; }  // every subgroup of S4 is
  std::string name() const { return to_string(label); }
};

// Galois group of the splitting field over Q, from the factorization over
// Q, the resolvent cubic and the discriminant square class. Throws
// DomainError for degenerate or non-squarefree input.
QuarticGaloisGroup quartic_galois_group(const BinaryQuartic<Rational>& q);

// Galois group label and order for an irreducible form of degree <= 4.
QuarticGaloisGroup irreducible_galois_group(const IntForm& f);

bool is_rational_square(const Rational& x);

}  // namespace hmsl
