#pragma once

#include <iosfwd>
#include <limits>
#include <string>

#include "hmsl/exact/rational.hpp"

namespace hmsl {

// Result of a valuation query: an exact value when the unit part is
// certified nonzero, otherwise only a lower bound.
struct Valuation {
  bool certified = false;
  long value = 0;

  static Valuation exact(long v) { return {true, v}; }
  static Valuation at_least(long bound) { return {false, bound}; }

  // "2" or ">=6".
  std::string str() const;
  friend bool operator==(const Valuation&, const Valuation&) = default;
};

// Capped relative precision p-adic number p^v * u, known modulo
// p^(v + precision). A unit part of 0 means "zero at this precision": only
// the bound value >= v + precision is known.
class PadicApprox {
 public:
  // Relative precision used for exact zeros; arithmetic treats it as
  // infinite.
  static constexpr long kExact = std::numeric_limits<long>::max() / 4;

  PadicApprox() = default;
  PadicApprox(long p, long valuation, Integer unit, long precision);

  // Known to be congruent to 0 modulo p^absolute_precision.
  static PadicApprox zero(long p, long absolute_precision);
  static PadicApprox exact_zero(long p) { return zero(p, kExact); }

  long prime() const { return p_; }
  long valuation_field() const { return v_; }
  const Integer& unit() const { return unit_; }
  long precision() const { return prec_; }
  long absolute_precision() const;
  bool is_indeterminate() const { return unit_ == 0; }
  bool is_exact_zero() const { return unit_ == 0 && prec_ >= kExact; }

  Valuation valuation() const;

  // p^v * u as a rational (0 for indeterminate values).
  Rational approximant() const;

  // Drops to relative precision min(precision(), n).
  PadicApprox with_precision(long n) const;

  // Throws PrecisionError when the value is indeterminate.
  PadicApprox inverse() const;

  PadicApprox& operator+=(const PadicApprox& o);
  PadicApprox& operator-=(const PadicApprox& o) { return *this += -o; }
  PadicApprox& operator*=(const PadicApprox& o);
  PadicApprox& operator/=(const PadicApprox& o) { return *this *= o.inverse(); }

  friend PadicApprox operator+(PadicApprox x, const PadicApprox& y) {
    return x += y;
  }
  friend PadicApprox operator-(PadicApprox x, const PadicApprox& y) {
    return x -= y;
  }
  friend PadicApprox operator*(PadicApprox x, const PadicApprox& y) {
    return x *= y;
  }
  friend PadicApprox operator/(PadicApprox x, const PadicApprox& y) {
    return x /= y;
  }
  PadicApprox operator-() const;

  friend bool operator==(const PadicApprox&, const PadicApprox&) = default;

  std::string str() const;

 private:
  void normalize();
  void check_prime(const PadicApprox& o) const;

  long p_ = 2;
  long v_ = 0;
  Integer unit_;
  long prec_ = 1;
};

Valuation valuation(const PadicApprox& x);

// x as a p-adic approximant with relative precision n. Throws DomainError
// for x = 0, whose valuation cannot be exact.
PadicApprox lift_to_padic(const Rational& x, long p, long n);

std::ostream& operator<<(std::ostream& os, const PadicApprox& x);

}  // namespace hmsl
