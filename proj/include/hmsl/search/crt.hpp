#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "hmsl/exact/rational.hpp"

namespace hmsl {

// x = target mod p^depth, for a p-integral rational target.
struct Congruence {
  long p = 3;
  long depth = 1;
  Rational target;
};

// Demands on a chart parameter triple: congruences per coordinate and an
// optional real target with a Euclidean radius (no radius: only the
// nearest representatives are wanted).
struct ParameterTargets {
  std::array<std::vector<Congruence>, 3> congruences;
  std::optional<std::array<Rational, 3>> real;
  std::optional<Rational> radius;

  void add_padic(long p, long depth, const std::array<Rational, 3>& point);
};

// A parameter triple written (n0/d, n1/d, n2/d) with gcd(d, n0, n1, n2) = 1;
// its height is max(d, |n_i|).
struct ParameterPoint {
  long d = 1;
  std::array<long, 3> n{};

  std::array<Rational, 3> value() const;
  long height() const;
};

ParameterPoint parameter_point(const std::array<Rational, 3>& x);

// Residue classes n_i = d * r_i mod M_i of the congruences.
class ParameterLattice {
 public:
  // Throws DomainError for depth < 1, a non-prime place, a target that is
  // not p-integral, conflicting congruences or a modulus beyond 10^12.
  explicit ParameterLattice(const ParameterTargets& t);

  const ParameterTargets& targets() const { return t_; }
  long modulus(int i) const { return m_[static_cast<std::size_t>(i)]; }
  long residue(int i) const { return r_[static_cast<std::size_t>(i)]; }
  // Denominators must avoid 3, 5 and every congruence prime.
  bool admissible_denominator(long d) const;
  bool satisfies(const std::array<Rational, 3>& x) const;
  // Squared Euclidean distance to the real target (0 without one).
  Rational distance2(const std::array<Rational, 3>& x) const;
  bool within_radius(const std::array<Rational, 3>& x) const;

  // Points of height exactly h inside the real ball, in no particular order.
  std::vector<ParameterPoint> points_of_height(long h) const;

 private:
  struct Window {
    bool bounded = false;
    long lo = 0, hi = 0;
  };
  Window window(int i, long d) const;

  ParameterTargets t_;
  std::array<long, 3> m_{1, 1, 1}, r_{0, 0, 0};
  std::vector<long> primes_;
  mutable std::vector<std::array<Window, 3>> windows_;  // cache by d
};

// The lowest-denominator triple meeting the congruences whose coordinates
// are the class representatives nearest the real target (0 without one),
// within the radius when one is given: CRT, then translation by the
// moduli. Throws SearchExhausted when no such triple has height <= H.
std::array<Rational, 3> crt_parameter(const ParameterTargets& t, long height_bound);

}  // namespace hmsl
