#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hmsl/errors.hpp"
#include "hmsl/exact/scalar.hpp"

namespace hmsl {

// Dense univariate polynomial over an exact field, coefficients stored
// from the constant term up. The zero element is carried so that field
// context (e.g. the characteristic of F_q) is never lost.
template <class F>
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(F zero) : zero_(std::move(zero)) {}
  DensePoly(std::vector<F> coeffs, F zero)
      : c_(std::move(coeffs)), zero_(std::move(zero)) {
    trim();
  }

  static DensePoly monomial(const F& c, std::size_t k, const F& zero) {
    std::vector<F> v(k + 1, zero);
    v[k] = c;
    return DensePoly(std::move(v), zero);
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }
  const F& zero() const { return zero_; }

  F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }
  const F& leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return c_.back();
  }

  F operator()(const F& x) const {
    F acc = zero_;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  DensePoly& operator+=(const DensePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  DensePoly& operator-=(const DensePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  DensePoly operator-() const {
    DensePoly r = *this;
    for (F& x : r.c_) x = -x;
    return r;
  }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return DensePoly(a.zero_);
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return DensePoly(std::move(r), a.zero_);
  }
  DensePoly scaled(const F& s) const {
    DensePoly r = *this;
    for (F& x : r.c_) x = x * s;
    r.trim();
    return r;
  }

  // Quotient and remainder; the divisor must be nonzero.
  std::pair<DensePoly, DensePoly> divmod(const DensePoly& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    DensePoly r = *this;
    if (degree() < d.degree()) return {DensePoly(zero_), r};
    std::vector<F> q(static_cast<std::size_t>(degree() - d.degree() + 1), zero_);
    F inv = inverse(d.leading());
    while (!r.is_zero() && r.degree() >= d.degree()) {
      std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
      F factor = r.leading() * inv;
      q[shift] = factor;
      for (std::size_t i = 0; i < d.c_.size(); ++i) r.c_[i + shift] -= factor * d.c_[i];
      r.trim();
    }
    return {DensePoly(std::move(q), zero_), r};
  }
  friend DensePoly operator%(const DensePoly& a, const DensePoly& b) {
    return a.divmod(b).second;
  }
  friend DensePoly operator/(const DensePoly& a, const DensePoly& b) {
    return a.divmod(b).first;
  }

  DensePoly monic() const {
    if (is_zero()) return *this;
    return scaled(inverse(leading()));
  }

  DensePoly derivative() const {
    if (c_.size() <= 1) return DensePoly(zero_);
    std::vector<F> d;
    for (std::size_t i = 1; i < c_.size(); ++i) {
      d.push_back(c_[i] * embed(Rational(static_cast<long>(i)), zero_));
    }
    return DensePoly(std::move(d), zero_);
  }

  friend bool operator==(const DensePoly& a, const DensePoly& b) {
    return a.c_ == b.c_;
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (is_zero_elt(c_[i])) continue;
      if (!s.empty()) s += " + ";
      s += "(" + c_[i].str() + ")";
      if (i > 0) s += "*x" + (i > 1 ? "^" + std::to_string(i) : std::string());
    }
    return s;
  }

 private:
  static bool is_zero_elt(const F& x) { return hmsl::is_zero(x); }
  void trim() {
    while (!c_.empty() && hmsl::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
  F zero_{};
};

// Monic gcd (zero if both inputs are zero).
template <class F>
DensePoly<F> gcd(DensePoly<F> a, DensePoly<F> b) {
  while (!b.is_zero()) {
    DensePoly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// base^e mod m.
template <class F>
DensePoly<F> pow_mod(DensePoly<F> base, Integer e, const DensePoly<F>& m) {
  DensePoly<F> r(std::vector<F>{one_like(base.zero())}, base.zero());
  base = base % m;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = (r * base) % m;
    e >>= 1;
    if (e > 0) base = (base * base) % m;
  }
  return r;
}

}  // namespace hmsl
