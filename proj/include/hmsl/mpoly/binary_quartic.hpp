#pragma once

#include <array>
#include <string>
#include <vector>

#include "hmsl/errors.hpp"
#include "hmsl/exact/scalar.hpp"
#include "hmsl/mpoly/dense_poly.hpp"
#include "hmsl/mpoly/sparse_poly.hpp"

namespace hmsl {

// c4 t^4 + c3 t^3 u + c2 t^2 u^2 + c1 t u^3 + c0 u^4; c[i] multiplies t^i u^(4-i).
template <class R>
struct BinaryQuartic {
  std::array<R, 5> c;

  // A form given as a polynomial in (t, u). It must be homogeneous of
  // degree 4 or zero; `zero` supplies the ring for missing coefficients.
  static BinaryQuartic from_form(const SparsePoly<R>& f, const R& zero) {
    if (f.nvars() != 2) throw DomainError("binary quartic needs a form in (t, u)");
    BinaryQuartic q{{zero, zero, zero, zero, zero}};
    for (const auto& [e, coeff] : f.terms()) {
      if (e[0] + e[1] != 4) throw DomainError("form is not homogeneous of degree 4");
      q.c[static_cast<std::size_t>(e[0])] = coeff;
    }
    return q;
  }

  SparsePoly<R> to_form() const {
    SparsePoly<R> f(2);
    for (int i = 0; i <= 4; ++i) f.add_term({i, 4 - i}, c[static_cast<std::size_t>(i)]);
    return f;
  }

  // Identically zero: the line lies inside the quartic hypersurface.
  bool degenerate() const {
    for (const R& x : c)
      if (!hmsl::is_zero(x)) return false;
    return true;
  }

  // Proper quartic: the t^4 coefficient may vanish (root at [1:0]) but the
  // form must not be zero.
  void require_nondegenerate() const {
    if (degenerate()) {
      throw DomainError("degenerate quartic (identically zero); use the degenerate branch");
    }
  }

  R operator()(const R& t, const R& u) const {
    R acc = zero_like(c[0]);
    R tp = one_like(c[0]);
    std::array<R, 5> up{one_like(c[0]), u, u * u, u * u * u, u * u * u * u};
    for (int i = 0; i <= 4; ++i) {
      acc += c[static_cast<std::size_t>(i)] * tp * up[static_cast<std::size_t>(4 - i)];
      tp = tp * t;
    }
    return acc;
  }

  // Dehomogenization at u = 1, as a polynomial in t.
  DensePoly<R> affine() const {
    return DensePoly<R>(std::vector<R>(c.begin(), c.end()), zero_like(c[0]));
  }

  template <class F>
  auto map(F&& f) const -> BinaryQuartic<decltype(f(std::declval<const R&>()))> {
    return {{f(c[0]), f(c[1]), f(c[2]), f(c[3]), f(c[4])}};
  }

  friend bool operator==(const BinaryQuartic&, const BinaryQuartic&) = default;

  std::string str() const { return to_form().str({"t", "u"}); }
};

// Classical invariants with a = c4, b = c3, c = c2, d = c1, e = c0:
// I = 12ae - 3bd + c^2, J = 72ace + 9bcd - 27ad^2 - 27eb^2 - 2c^3.
template <class R>
R invariant_I(const BinaryQuartic<R>& q) {
  const R &a = q.c[4], &b = q.c[3], &c = q.c[2], &d = q.c[1], &e = q.c[0];
  auto k = [&](long n) { return embed(Rational(n), a); };
  return k(12) * a * e - k(3) * b * d + c * c;
}

template <class R>
R invariant_J(const BinaryQuartic<R>& q) {
  const R &a = q.c[4], &b = q.c[3], &c = q.c[2], &d = q.c[1], &e = q.c[0];
  auto k = [&](long n) { return embed(Rational(n), a); };
  return k(72) * a * c * e + k(9) * b * c * d - k(27) * a * d * d -
         k(27) * e * b * b - k(2) * c * c * c;
}

// disc = (4 I^3 - J^2) / 27, evaluated through its integer-coefficient
// expansion so that it is also valid in characteristic 3.
template <class R>
R discriminant(const BinaryQuartic<R>& q) {
  q.require_nondegenerate();
  const R &a = q.c[4], &b = q.c[3], &c = q.c[2], &d = q.c[1], &e = q.c[0];
  auto k = [&](long n) { return embed(Rational(n), a); };
  R a2 = a * a, b2 = b * b, c2 = c * c, d2 = d * d, e2 = e * e;
  R r = k(256) * a2 * a * e2 * e;
  r -= k(192) * a2 * b * d * e2;
  r -= k(128) * a2 * c2 * e2;
  r += k(144) * a2 * c * d2 * e;
  r -= k(27) * a2 * d2 * d2;
  r += k(144) * a * b2 * c * e2;
  r -= k(6) * a * b2 * d2 * e;
  r -= k(80) * a * b * c2 * d * e;
  r += k(18) * a * b * c * d2 * d;
  r += k(16) * a * c2 * c2 * e;
  r -= k(4) * a * c2 * c * d2;
  r -= k(27) * b2 * b2 * e2;
  r += k(18) * b2 * b * c * d * e;
  r -= k(4) * b2 * b * d2 * d;
  r -= k(4) * b2 * c2 * c * e;
  r += b2 * c2 * d2;
  return r;
}

}  // namespace hmsl
