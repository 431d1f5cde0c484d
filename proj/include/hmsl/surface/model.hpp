#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "hmsl/exact/cyclo.hpp"
#include "hmsl/exact/rational.hpp"
#include "hmsl/mpoly/sparse_poly.hpp"
#include "hmsl/surface/twist.hpp"

namespace hmsl {

using RPoly = SparsePoly<Rational>;

// A polynomial with rational coefficients written as scale * primitive,
// where primitive is integral with content 1 and a positive first
// coefficient in graded-lex descending order.
struct ScaledPoly {
  RPoly primitive;
  Rational scale{1};
};

ScaledPoly normalize_integral(const RPoly& f);

// The twisted surface: q1 = q2 = q4 = 0 in model coordinates.
struct SurfaceModel {
  TwistData twist;
  RPoly q1, q2, q4;               // normalized (integral, content 1)
  std::array<Rational, 3> scales;  // q_i = scale_i * (sigma_i o M)
  // sigma[k] = sigma_k o M for k = 1..6 (index 0 unused), and
  // D = sigma_3^2 - 4 sigma_6, all in model coordinates.
  std::array<RPoly, 7> sigma;
  RPoly curve_v;

  std::vector<std::string> names() const { return twist.coordinate_names(); }
  bool is_char3() const { return twist.label == "char3-x"; }
};

// sigma_k o M expanded over Q(omega). Every coefficient must be rational
// (fixed by conjugation), otherwise the twist is rejected with a
// DomainError; a singular matrix is rejected as well.
SurfaceModel twisted_equations(const TwistData& tw);

// Galois-stability test used by twisted_equations.
bool is_conjugation_stable(const SparsePoly<Cyclo>& f);

}  // namespace hmsl
