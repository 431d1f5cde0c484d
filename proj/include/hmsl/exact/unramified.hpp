#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hmsl/exact/integer.hpp"
#include "hmsl/exact/padic.hpp"
#include "hmsl/exact/rational.hpp"

namespace hmsl {

// (Z/p^N)[y]/(m(y)) for a monic m of degree f irreducible mod p: the ring of
// integers of the degree-f unramified extension of Q_p, truncated at
// absolute precision N. With N = 1 it is the residue field F_{p^f}.
class UnramifiedRing {
 public:
  // Uses the lexicographically smallest monic irreducible of degree f.
  static std::shared_ptr<const UnramifiedRing> make(long p, int degree,
                                                    long precision);

  long prime() const { return p_; }
  int degree() const { return static_cast<int>(modulus_.size()); }
  long precision() const { return n_; }
  const Integer& modulus_power() const { return pn_; }
  // Low-order coefficients of m; the leading 1 is implicit.
  const std::vector<Integer>& modulus() const { return modulus_; }

  // Same modulus at a different precision.
  std::shared_ptr<const UnramifiedRing> with_precision(long precision) const;

 private:
  UnramifiedRing(long p, long n, std::vector<Integer> modulus);
  long p_;
  long n_;
  Integer pn_;
  std::vector<Integer> modulus_;
};

using UnramifiedRingPtr = std::shared_ptr<const UnramifiedRing>;

class UnramifiedElt {
 public:
  UnramifiedElt() = default;
  explicit UnramifiedElt(UnramifiedRingPtr ring);  // zero
  UnramifiedElt(UnramifiedRingPtr ring, std::vector<Integer> coords);

  static UnramifiedElt from_integer(UnramifiedRingPtr ring, const Integer& n);
  // Denominator must be prime to p.
  static UnramifiedElt from_rational(UnramifiedRingPtr ring,
                                     const Rational& x);
  // The generator y.
  static UnramifiedElt generator(UnramifiedRingPtr ring);

  // Every element of the residue field (ring precision must be 1), in a
  // fixed order.
  static std::vector<UnramifiedElt> residue_elements(UnramifiedRingPtr ring);

  const UnramifiedRingPtr& ring() const { return ring_; }
  const std::vector<Integer>& coords() const { return c_; }

  bool is_zero() const;
  bool is_unit() const;

  // min of the coordinate valuations; a lower bound (>= N) for zero.
  Valuation valuation() const;

  // Reduction to a lower precision.
  UnramifiedElt reduce(long precision) const;
  // Same residues read in a ring of higher precision.
  UnramifiedElt lift(long precision) const;

  // Exact division by p^k; precision drops by k. Requires valuation >= k.
  UnramifiedElt divide_by_p_power(long k) const;

  // Inverse of a unit (Newton iteration from the residue field).
  UnramifiedElt inverse() const;
  UnramifiedElt pow(unsigned long e) const;

  UnramifiedElt& operator+=(const UnramifiedElt& o);
  UnramifiedElt& operator-=(const UnramifiedElt& o);
  UnramifiedElt& operator*=(const UnramifiedElt& o);

  friend UnramifiedElt operator+(UnramifiedElt x, const UnramifiedElt& y) {
    return x += y;
  }
  friend UnramifiedElt operator-(UnramifiedElt x, const UnramifiedElt& y) {
    return x -= y;
  }
  friend UnramifiedElt operator*(UnramifiedElt x, const UnramifiedElt& y) {
    return x *= y;
  }
  UnramifiedElt operator-() const;

  friend bool operator==(const UnramifiedElt& x, const UnramifiedElt& y);

  std::string str() const;

 private:
  void check_ring(const UnramifiedElt& o) const;
  UnramifiedRingPtr ring_;
  std::vector<Integer> c_;
};

}  // namespace hmsl
