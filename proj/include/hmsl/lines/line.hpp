#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "hmsl/errors.hpp"
#include "hmsl/exact/matrix.hpp"
#include "hmsl/exact/scalar.hpp"
#include "hmsl/mpoly/binary_quartic.hpp"
#include "hmsl/mpoly/restrict.hpp"
#include "hmsl/surface/model.hpp"

namespace hmsl {

// A projective line stored as the reduced row echelon form of its two
// spanning points, so equal lines compare equal structurally. The
// parametrization is L(t, u) = t*P + u*Q for the canonical rows P, Q.
template <class R>
class Line {
 public:
  Line() = default;

  static Line through(const std::vector<R>& p, const std::vector<R>& q) {
    if (p.size() != q.size() || p.empty()) throw DomainError("line points must have equal length");
    Matrix<R> m(std::vector<std::vector<R>>{p, q});
    if (m.rref().size() < 2) throw DomainError("proportional points do not span a line");
    Line l;
    l.p_ = m.row(0);
    l.q_ = m.row(1);
    return l;
  }

  const std::vector<R>& p() const { return p_; }
  const std::vector<R>& q() const { return q_; }
  std::size_t dim() const { return p_.size(); }

  std::vector<R> point(const R& t, const R& u) const {
    std::vector<R> x;
    for (std::size_t i = 0; i < p_.size(); ++i) x.push_back(t * p_[i] + u * q_[i]);
    return x;
  }

  bool contains(const std::vector<R>& x) const {
    Matrix<R> m(std::vector<std::vector<R>>{p_, q_, x});
    return m.rank() == 2;
  }

  friend bool operator==(const Line&, const Line&) = default;

 private:
  std::vector<R> p_, q_;
};

template <class R>
Line<R> line_through(const std::vector<R>& p, const std::vector<R>& q) {
  return Line<R>::through(p, q);
}

template <class C, class R>
SparsePoly<R> restrict_to_line(const SparsePoly<C>& f, const Line<R>& l) {
  return restrict_to_points(f, l.p(), l.q());
}

template <class C, class R>
bool lies_in(const Line<R>& l, const SparsePoly<C>& f) {
  return restrict_to_line(f, l).is_zero();
}

template <class R>
struct LineQuartic {
  BinaryQuartic<R> quartic;
  bool degenerate = false;  // the line lies inside the quartic hypersurface
};

// q4 of the model restricted to the parametrization t*P + u*Q. The line
// must lie on both quadrics.
template <class R>
LineQuartic<R> quartic_of_points(const SurfaceModel& model, const std::vector<R>& p,
                                 const std::vector<R>& q) {
  if (!restrict_to_points(model.q1, p, q).is_zero() || !restrict_to_points(model.q2, p, q).is_zero()) {
    throw DomainError("line is not contained in both quadrics of the model");
  }
  SparsePoly<R> f = restrict_to_points(model.q4, p, q);
  const R zero = zero_like(p.front());
  LineQuartic<R> out{BinaryQuartic<R>::from_form(f, zero), false};
  out.degenerate = out.quartic.degenerate();
  return out;
}

template <class R>
LineQuartic<R> quartic_of_line(const Line<R>& l, const SurfaceModel& model) {
  return quartic_of_points(model, l.p(), l.q());
}

// Integral points P, Q spanning the lattice L ∩ Z^n: the content of P is 1
// and the 2x2 minors of (P, Q) are coprime. Prime factors of the minor gcd
// are found by trial division; a cofactor beyond the trial bound is removed
// only when a coordinate of P is invertible modulo it.
std::pair<std::vector<Integer>, std::vector<Integer>> saturated_basis(const Line<Rational>& l);

// q4 restricted to the saturated basis, so its reduction mod any prime
// describes the reduction of the line.
LineQuartic<Rational> integral_quartic_of_line(const Line<Rational>& l, const SurfaceModel& model);

// The points t*P + u*Q of an integral basis at local parameters (t, u).
std::vector<std::vector<UnramifiedElt>> local_points(
    const std::vector<Integer>& p, const std::vector<Integer>& q,
    const std::vector<std::array<UnramifiedElt, 2>>& params);

}  // namespace hmsl
