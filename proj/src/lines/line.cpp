#include "hmsl/lines/line.hpp"

#include <algorithm>

namespace hmsl {

namespace {

using IVec = std::vector<Integer>;

IVec clear_denominators(const std::vector<Rational>& v) {
  Integer den = 1;
  for (const auto& x : v) den = lcm(den, x.denominator());
  IVec out;
  Integer g = 0;
  for (const auto& x : v) {
    out.push_back(x.numerator() * (den / x.denominator()));
    g = gcd(g, out.back());
  }
  if (g != 0)
    for (auto& x : out) x /= g;
  return out;
}

Integer minor_gcd(const IVec& p, const IVec& q) {
  Integer g = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) g = gcd(g, Integer(p[i] * q[j] - p[j] * q[i]));
  return g;
}

// Replace q by (q + x p) / m when q + x p = 0 mod m for some x; p is
// primitive. Returns false if no coordinate of p is a unit mod m.
bool divide_out(const IVec& p, IVec& q, const Integer& m) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (gcd(p[i], m) != 1) continue;
    Integer x = mod(Integer(-q[i] * inverse_mod(p[i], m)), m);
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (mod(Integer(q[j] + x * p[j]), m) != 0) return false;
    }
    for (std::size_t j = 0; j < p.size(); ++j) q[j] = (q[j] + x * p[j]) / m;
    return true;
  }
  return false;
}

}  // namespace

std::pair<std::vector<Integer>, std::vector<Integer>> saturated_basis(const Line<Rational>& l) {
  IVec p = clear_denominators(l.p());
  IVec q = clear_denominators(l.q());
  Integer g = minor_gcd(p, q);
  for (Integer f = 2; f * f <= g && f < 100000; ++f) {
    while (g % f == 0) {
      // p is primitive, so it is nonzero mod the prime f and some
      // coordinate is a unit there.
      if (!divide_out(p, q, f)) break;
      g = minor_gcd(p, q);
    }
  }
  if (g > 1) divide_out(p, q, g);
  return {p, q};
}

LineQuartic<Rational> integral_quartic_of_line(const Line<Rational>& l, const SurfaceModel& model) {
  auto [p, q] = saturated_basis(l);
  std::vector<Rational> pr(p.begin(), p.end()), qr(q.begin(), q.end());
  return quartic_of_points(model, pr, qr);
}

std::vector<std::vector<UnramifiedElt>> local_points(
    const std::vector<Integer>& p, const std::vector<Integer>& q,
    const std::vector<std::array<UnramifiedElt, 2>>& params) {
  std::vector<std::vector<UnramifiedElt>> out;
  for (const auto& [t, u] : params) {
    std::vector<UnramifiedElt> x;
    for (std::size_t i = 0; i < p.size(); ++i) {
      x.push_back(t * UnramifiedElt::from_integer(t.ring(), p[i]) +
                  u * UnramifiedElt::from_integer(t.ring(), q[i]));
    }
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace hmsl
