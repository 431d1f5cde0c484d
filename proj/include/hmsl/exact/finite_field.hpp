#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hmsl/exact/rational.hpp"

namespace hmsl {

// F_p (degree 1) or F_{p^2} = F_p[w]/(w^2 - n) for a fixed non-residue n.
// For p = 2 mod 3 the non-residue is -3, so w = sqrt(-3); otherwise it is
// the smallest quadratic non-residue.
struct Fq {
  std::int64_t p = 0;
  int degree = 1;
  std::int64_t nonresidue = 0;

  // Throws DomainError unless p is an odd prime <= 10^4 (degree 2) or a
  // prime <= 10^4 (degree 1).
  static Fq prime_field(std::int64_t p);
  static Fq quadratic(std::int64_t p);

  std::int64_t order() const { return degree == 1 ? p : p * p; }
  friend bool operator==(const Fq&, const Fq&) = default;
};

class FqElt {
 public:
  FqElt() = default;
  FqElt(const Fq& field, std::int64_t c0, std::int64_t c1 = 0);

  // Image of a rational whose denominator is prime to p.
  static FqElt from_rational(const Fq& field, const Rational& x);

  // sqrt(-3) in F_{p^2} (or F_p when -3 is a square there).
  static FqElt sqrt_minus3(const Fq& field);

  // A primitive cube root of unity, (-1 + sqrt(-3))/2. Requires p != 3.
  static FqElt omega(const Fq& field);

  // Enumerates the field in a fixed order: c1 major, c0 minor.
  static std::vector<FqElt> elements(const Fq& field);

  const Fq& field() const { return field_; }
  std::int64_t c0() const { return c0_; }
  std::int64_t c1() const { return c1_; }

  bool is_zero() const { return c0_ == 0 && c1_ == 0; }
  bool is_one() const { return c0_ == 1 && c1_ == 0; }

  FqElt inverse() const;
  FqElt pow(std::uint64_t e) const;

  FqElt& operator+=(const FqElt& o);
  FqElt& operator-=(const FqElt& o);
  FqElt& operator*=(const FqElt& o);
  FqElt& operator/=(const FqElt& o) { return *this *= o.inverse(); }

  friend FqElt operator+(FqElt x, const FqElt& y) { return x += y; }
  friend FqElt operator-(FqElt x, const FqElt& y) { return x -= y; }
  friend FqElt operator*(FqElt x, const FqElt& y) { return x *= y; }
  friend FqElt operator/(FqElt x, const FqElt& y) { return x /= y; }
  FqElt operator-() const;

  friend bool operator==(const FqElt&, const FqElt&) = default;

  std::string str() const;

 private:
  void check_same(const FqElt& o) const;
  Fq field_;
  std::int64_t c0_ = 0;
  std::int64_t c1_ = 0;
};

std::ostream& operator<<(std::ostream& os, const FqElt& x);

}  // namespace hmsl
