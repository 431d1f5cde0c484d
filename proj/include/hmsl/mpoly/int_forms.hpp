#pragma once

#include <vector>

#include "hmsl/exact/finite_field.hpp"
#include "hmsl/exact/integer.hpp"
#include "hmsl/exact/rational.hpp"
#include "hmsl/mpoly/binary_quartic.hpp"
#include "hmsl/mpoly/factor_modp.hpp"

namespace hmsl {

// Binary form over Z of degree size()-1; entry i multiplies t^i u^(d-i).
// Multiplying forms is multiplying the coefficient vectors as polynomials.
using IntForm = std::vector<Integer>;

int form_degree(const IntForm& f);
IntForm form_mul(const IntForm& a, const IntForm& b);
IntForm form_sub(const IntForm& a, const IntForm& b);
Integer form_content(const IntForm& f);

// Divides out the content and makes the highest nonzero t-coefficient
// positive.
IntForm primitive_part(const IntForm& f);

// Coefficients reduced into (-m/2, m/2].
IntForm form_symmetric_mod(const IntForm& f, const Integer& m);

// Integer multiple of a rational quartic with content 1 and positive
// leading t-coefficient.
IntForm primitive_integral(const BinaryQuartic<Rational>& q);
BinaryQuartic<Rational> quartic_from_form(const IntForm& f);

// f(t, 1) mod p; the form degree is tracked separately by callers.
FpPoly form_mod_p(const IntForm& f, const Fq& field);
IntForm form_from_fp(const FpPoly& g, int degree);

// Exact division over Z of binary forms; false if g does not divide f.
bool form_divides(const IntForm& g, const IntForm& f, IntForm* quotient = nullptr);

// A factor of a form modulo p: its dehomogenized polynomial and its
// degree as a form (larger than the polynomial degree when [1:0] is a root).
struct FpFormFactor {
  FpPoly poly;
  int degree = 0;
};

// Given F congruent mod p to the product of pairwise coprime factors, lifts
// them to forms G_i with F = prod G_i mod p^N. The first factor absorbs the
// unit. Throws DomainError if the factors do not multiply to F mod p or
// are not coprime.
std::vector<IntForm> hensel_lift_forms(const IntForm& f,
                                       const std::vector<FpFormFactor>& factors,
                                       long p, long n);

// Irreducible factors over Q of a squarefree primitive form, each primitive
// with positive leading t-coefficient, sorted by (degree, coefficients).
// Their product is f up to sign.
std::vector<IntForm> factor_over_Q(const IntForm& f);

}  // namespace hmsl
