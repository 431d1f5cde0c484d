#pragma once

#include <iosfwd>
#include <string>

#include "hmsl/exact/rational.hpp"

namespace hmsl {

// Element a + b*omega of Q(omega), omega^2 + omega + 1 = 0.
// sqrt(-3) is represented as 2*omega + 1.
class Cyclo {
 public:
  Cyclo() = default;
  Cyclo(long n) : a_(n) {}  // NOLINT
  Cyclo(int n) : a_(n) {}  // NOLINT
  Cyclo(Rational a) : a_(std::move(a)) {}  // NOLINT
  Cyclo(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Cyclo omega() { return Cyclo(0, 1); }
  static Cyclo sqrt_minus3() { return Cyclo(1, 2); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  // Norm to Q: a^2 - ab + b^2.
  Rational norm() const;
  Cyclo inverse() const;

  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo& operator/=(const Cyclo& o) { return *this *= o.inverse(); }

  friend Cyclo operator+(Cyclo x, const Cyclo& y) { return x += y; }
  friend Cyclo operator-(Cyclo x, const Cyclo& y) { return x -= y; }
  friend Cyclo operator*(Cyclo x, const Cyclo& y) { return x *= y; }
  friend Cyclo operator/(Cyclo x, const Cyclo& y) { return x /= y; }
  Cyclo operator-() const { return Cyclo(-a_, -b_); }

  friend bool operator==(const Cyclo&, const Cyclo&) = default;

  std::string str() const;

 private:
  Rational a_;
  Rational b_;
};

// omega -> omega^2 = -1 - omega; fixes Q.
Cyclo galois_conjugate(const Cyclo& x);

std::ostream& operator<<(std::ostream& os, const Cyclo& x);

}  // namespace hmsl
