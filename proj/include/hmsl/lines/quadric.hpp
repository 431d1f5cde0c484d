#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hmsl/errors.hpp"
#include "hmsl/exact/integer.hpp"
#include "hmsl/exact/rational.hpp"
#include "hmsl/lines/line.hpp"
#include "hmsl/surface/model.hpp"

namespace hmsl {

using QVec = std::vector<Rational>;

// Raised when a quadratic form has no isotropic vector over Q in the
// searched subspace. `field_discriminant` is a squarefree d such that the
// form becomes isotropic over Q(sqrt(d)).
class ExtensionNeeded : public DomainError {
 public:
  ExtensionNeeded(const std::string& what, Integer d)
      : DomainError(what), d_(std::move(d)) {}
  const Integer& field_discriminant() const { return d_; }

 private:
  Integer d_;
};

// B(x, y) = (q(x + y) - q(x) - q(y)) / 2 for a quadratic form q.
Rational polar(const RPoly& q, const QVec& x, const QVec& y);

// The linear form B(x, .) as a coefficient row.
QVec polar_row(const RPoly& q, const QVec& x);

// Coefficient row of a linear form.
QVec linear_row(const RPoly& l);

// Gram matrix of q on the given vectors.
std::vector<std::vector<Rational>> gram(const RPoly& q, const std::vector<QVec>& basis);

// Squarefree part of a nonzero integer, keeping the sign.
Integer squarefree_part(const Integer& n);

// Coefficients c (not all zero) with q(sum c_i basis_i) = 0. Small boxes are
// scanned first, then a diagonal form is solved by a bounded Legendre
// search. Throws ExtensionNeeded when nothing is found.
QVec find_isotropic(const RPoly& q, const std::vector<QVec>& basis);

QVec combine(const std::vector<QVec>& basis, const QVec& coeffs);

// The ruling line through a smooth point x of {q = 0, linear forms = 0}
// indexed by [r:s]: the tangent hyperplane cuts the quadric in a cone over a
// conic, which is parametrized from a small point on it.
Line<Rational> tangent_cone_line(const RPoly& q, const std::vector<RPoly>& linear,
                                 const QVec& x, const Rational& r, const Rational& s);

Line<Rational> tangent_cone_lines(const SurfaceModel& model, const QVec& x, const Rational& r,
                                  const Rational& s);

// A rational 3-parameter family of lines on the quadric threefold
// q1 = q2 = 0, with an inverse on its domain.
class LineChart {
 public:
  virtual ~LineChart() = default;
  virtual std::string name() const = 0;
  virtual Line<Rational> line(const std::array<Rational, 3>& abc) const = 0;
  virtual std::optional<std::array<Rational, 3>> coordinates(const Line<Rational>& l) const = 0;
};

// Basis e0..e4 of q1 = 0 with q2 = y0*y1 + y2*y3 + d*y4^2 and e0 the seed
// point. When a preferred line through the seed is given, e2 is taken on it,
// so that line has chart coordinates (0, 0, 0). Lines with y0, y2
// independent are
//   R1 = e0 - d a^2 e1 - (2dab + c) e3 + a e4,
//   R2 = c e1 + e2 - d b^2 e3 + b e4.
class HyperbolicChart : public LineChart {
 public:
  HyperbolicChart(const SurfaceModel& model, const QVec& seed,
                  const std::optional<Line<Rational>>& preferred = std::nullopt);

  std::string name() const override { return "hyperbolic"; }
  Line<Rational> line(const std::array<Rational, 3>& abc) const override;
  std::optional<std::array<Rational, 3>> coordinates(const Line<Rational>& l) const override;

  const std::array<QVec, 5>& basis() const { return e_; }
  const Rational& d() const { return d_; }
  // Coordinates y0..y4 of a vector of q1 = 0.
  std::array<Rational, 5> y(const QVec& v) const;

 private:
  RPoly q_;
  std::array<QVec, 5> e_;
  Rational d_;
};

}  // namespace hmsl
