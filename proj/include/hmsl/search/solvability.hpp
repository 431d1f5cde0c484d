#pragma once

#include <string>
#include <vector>

#include "hmsl/exact/rational.hpp"
#include "hmsl/mpoly/binary_quartic.hpp"
#include "hmsl/mpoly/galois.hpp"
#include "hmsl/mpoly/int_forms.hpp"

namespace hmsl {

struct SolvabilityFactor {
  IntForm form;  // primitive, irreducible over Q
  int degree = 1;
  std::string group;  // C1, C2, C3, S3, or a quartic label
  int order = 1;
};

struct SolvabilityReport {
  std::vector<SolvabilityFactor> factors;
  QuarticGaloisGroup group;  // of the whole splitting field
  // Every group acting on at most four roots is solvable.
  bool solvable() const { return true; }
};

// Factorization over Q with a Galois group per factor. Throws DomainError
// for a degenerate or non-squarefree quartic.
SolvabilityReport solvability_report(const BinaryQuartic<Rational>& q);

}  // namespace hmsl
