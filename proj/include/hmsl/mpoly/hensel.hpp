#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hmsl/exact/padic.hpp"
#include "hmsl/exact/rational.hpp"
#include "hmsl/exact/unramified.hpp"
#include "hmsl/mpoly/binary_quartic.hpp"
#include "hmsl/mpoly/int_forms.hpp"

namespace hmsl {

enum class LocalVerdict { Unramified, Inconclusive };

std::string to_string(LocalVerdict v);

// One irreducible factor of the reduction mod p. `coeffs` holds the monic
// polynomial in t from the constant term up; the factor u (root [1:0]) has
// at_infinity set and coeffs {1}.
struct ModPFactor {
  std::vector<long> coeffs;
  int degree = 1;
  int multiplicity = 1;
  bool at_infinity = false;
  std::string str() const;
};

enum class BlockKind { Squarefree, RepeatedQuadratic, Higher };

std::string to_string(BlockKind k);

// A coprime block of the mod-p factorization, Hensel-lifted.
struct LocalBlock {
  BlockKind kind = BlockKind::Squarefree;
  IntForm form;  // known modulo p^precision
  std::optional<Valuation> disc_valuation;
  LocalVerdict verdict = LocalVerdict::Inconclusive;
  int residue_degree = 1;
};

using LocalRoot = std::array<UnramifiedElt, 2>;  // (t, u), primitive

struct LocalFactorization {
  long p = 0;
  long precision = 0;
  IntForm form;  // primitive integral representative of the quartic
  std::vector<ModPFactor> mod_p;
  bool squarefree_mod_p = false;
  std::vector<LocalBlock> blocks;
  LocalVerdict verdict = LocalVerdict::Inconclusive;
  // Degree of the unramified extension over which the quartic splits into
  // linear factors (meaningful only for an unramified verdict).
  int residue_degree = 1;
  // Roots in that extension, present only for an unramified verdict.
  std::vector<LocalRoot> roots;

  std::string pattern() const;  // e.g. "1^2 2"
};

// Local splitting analysis of a rational quartic at an odd prime p with
// p-adic working precision `precision`. Squarefree reduction, or repeated
// linear factors whose lifted quadratic block has even discriminant
// valuation, certify an unramified splitting field; anything else is
// inconclusive. Throws PrecisionError when a block discriminant vanishes to
// the working precision, DomainError for non-squarefree quartics.
LocalFactorization hensel_factor_quartic(const BinaryQuartic<Rational>& q, long p,
                                         long precision);

// Value of an integral form at (t, u) in an unramified ring.
UnramifiedElt evaluate_form(const IntForm& f, const UnramifiedElt& t, const UnramifiedElt& u);

}  // namespace hmsl
