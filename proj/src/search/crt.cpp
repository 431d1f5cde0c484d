#include "hmsl/search/crt.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "hmsl/errors.hpp"

namespace hmsl {

namespace {

constexpr long kMaxModulus = 1'000'000'000'000L;
constexpr long kBig = std::numeric_limits<long>::max() / 4;

long clamp_long(const Integer& n) {
  if (n > kBig) return kBig;
  if (n < -kBig) return -kBig;
  return n.get_si();
}

long mod_long(__int128 a, long m) {
  __int128 r = a % m;
  if (r < 0) r += m;
  return static_cast<long>(r);
}

bool p_integral(const Rational& x, long p) { return mod(x.denominator(), Integer(p)) != 0; }

// Residue of x modulo p^k for a p-integral x.
long residue_mod(const Rational& x, long pk) {
  Integer m(pk);
  return mod(x.numerator() * inverse_mod(x.denominator(), m), m).get_si();
}

// First value >= lo in the class c mod m, stepping by m up to hi.
template <class F>
void for_class(long c, long m, long lo, long hi, F&& f) {
  if (lo > hi) return;
  long n = lo + mod_long(static_cast<__int128>(c) - lo, m);
  for (; n <= hi; n += m) f(n);
}

}  // namespace

void ParameterTargets::add_padic(long p, long depth, const std::array<Rational, 3>& point) {
  for (std::size_t i = 0; i < 3; ++i) congruences[i].push_back({p, depth, point[i]});
}

std::array<Rational, 3> ParameterPoint::value() const {
  return {Rational(Integer(n[0]), Integer(d)), Rational(Integer(n[1]), Integer(d)),
          Rational(Integer(n[2]), Integer(d))};
}

long ParameterPoint::height() const {
  long h = d;
  for (long x : n) h = std::max(h, std::abs(x));
  return h;
}

ParameterPoint parameter_point(const std::array<Rational, 3>& x) {
  Integer d = 1;
  for (const auto& v : x) d = lcm(d, v.denominator());
  ParameterPoint pt;
  if (!d.fits_slong_p()) throw DomainError("parameter denominator too large");
  pt.d = d.get_si();
  for (std::size_t i = 0; i < 3; ++i) {
    Integer n = x[i].numerator() * (d / x[i].denominator());
    if (!n.fits_slong_p()) throw DomainError("parameter numerator too large");
    pt.n[i] = n.get_si();
  }
  return pt;
}

ParameterLattice::ParameterLattice(const ParameterTargets& t) : t_(t) {
  if (t_.radius && t_.radius->sign() < 0) throw DomainError("negative real radius");
  if (t_.radius && !t_.real) throw DomainError("a radius needs a real target");
  for (std::size_t i = 0; i < 3; ++i) {
    // Combine the congruences of coordinate i by CRT, prime by prime.
    std::vector<std::pair<long, std::pair<long, Rational>>> by_prime;  // p -> (depth, target)
    for (const auto& c : t_.congruences[i]) {
      if (c.depth < 1) throw DomainError("congruence depth must be >= 1");
      if (c.p < 2 || !is_prime(c.p)) throw DomainError("congruence place " + std::to_string(c.p) + " is not a prime");
      if (!p_integral(c.target, c.p))
        throw DomainError("target " + c.target.str() + " is not " + std::to_string(c.p) + "-integral");
      auto it = std::find_if(by_prime.begin(), by_prime.end(), [&](const auto& e) { return e.first == c.p; });
      if (it == by_prime.end()) {
        by_prime.push_back({c.p, {c.depth, c.target}});
        continue;
      }
      // Two demands at one prime must agree to the smaller depth.
      const long k = std::min(it->second.first, c.depth);
      Rational diff = it->second.second - c.target;
      if (!diff.is_zero() && valuation(diff.numerator(), Integer(c.p)) < k)
        throw DomainError("conflicting congruences at " + std::to_string(c.p));
      if (c.depth > it->second.first) it->second = {c.depth, c.target};
    }
    __int128 m = 1, r = 0;
    for (const auto& [p, dt] : by_prime) {
      if (std::find(primes_.begin(), primes_.end(), p) == primes_.end()) primes_.push_back(p);
      Integer pk = pow(p, static_cast<unsigned long>(dt.first));
      if (pk > kMaxModulus || m * pk.get_si() > kMaxModulus) throw DomainError("congruence modulus beyond 10^12");
      const long q = pk.get_si();
      const long a = residue_mod(dt.second, q);
      // r' = r mod m, r' = a mod q.
      const long mm = static_cast<long>(m);
      const long s = mod_long(static_cast<__int128>(a - mod_long(r, q)) *
                                  inverse_mod(Integer(mm), Integer(q)).get_si(),
                              q);
      r = r + m * s;
      m *= q;
    }
    m_[i] = static_cast<long>(m);
    r_[i] = static_cast<long>(r);
  }
  std::sort(primes_.begin(), primes_.end());
}

bool ParameterLattice::admissible_denominator(long d) const {
  if (d < 1 || d % 3 == 0 || d % 5 == 0) return false;
  return std::none_of(primes_.begin(), primes_.end(), [&](long p) { return d % p == 0; });
}

bool ParameterLattice::satisfies(const std::array<Rational, 3>& x) const {
  for (std::size_t i = 0; i < 3; ++i)
    for (const auto& c : t_.congruences[i]) {
      if (!p_integral(x[i], c.p)) return false;
      Rational diff = x[i] - c.target;
      if (diff.is_zero()) continue;
      if (valuation(diff.numerator(), Integer(c.p)) < c.depth) return false;
    }
  return true;
}

Rational ParameterLattice::distance2(const std::array<Rational, 3>& x) const {
  if (!t_.real) return Rational(0);
  Rational s;
  for (std::size_t i = 0; i < 3; ++i) {
    Rational e = x[i] - (*t_.real)[i];
    s += e * e;
  }
  return s;
}

bool ParameterLattice::within_radius(const std::array<Rational, 3>& x) const {
  if (!t_.radius) return true;
  return distance2(x) <= *t_.radius * *t_.radius;
}

ParameterLattice::Window ParameterLattice::window(int i, long d) const {
  if (!t_.real || !t_.radius) return {};
  if (windows_.size() <= static_cast<std::size_t>(d)) windows_.resize(static_cast<std::size_t>(d) + 1);
  auto& slot = windows_[static_cast<std::size_t>(d)];
  if (slot[0].bounded) return slot[static_cast<std::size_t>(i)];
  for (std::size_t k = 0; k < 3; ++k) {
    Rational c = Rational(d) * (*t_.real)[k], w = Rational(d) * *t_.radius;
    slot[k] = {true, clamp_long(-((w - c).floor())), clamp_long((c + w).floor())};
  }
  return slot[static_cast<std::size_t>(i)];
}

std::vector<ParameterPoint> ParameterLattice::points_of_height(long h) const {
  std::vector<ParameterPoint> out;
  if (h < 1) return out;
  auto range = [&](int i, long d, long bound) -> std::pair<long, long> {
    Window w = window(i, d);
    long lo = -bound, hi = bound;
    if (w.bounded) {
      lo = std::max(lo, w.lo);
      hi = std::min(hi, w.hi);
    }
    return {lo, hi};
  };
  for (long d = 1; d <= h; ++d) {
    if (!admissible_denominator(d)) continue;
    std::array<long, 3> cls;
    for (int i = 0; i < 3; ++i) cls[static_cast<std::size_t>(i)] = mod_long(static_cast<__int128>(d) * r_[static_cast<std::size_t>(i)], m_[static_cast<std::size_t>(i)]);
    auto emit = [&](long n0, long n1, long n2) {
      long g = std::gcd(std::gcd(d, std::abs(n0)), std::gcd(std::abs(n1), std::abs(n2)));
      if (g != 1) return;
      ParameterPoint pt{d, {n0, n1, n2}};
      if (within_radius(pt.value())) out.push_back(pt);
    };
    // Coordinate i carries |n_i| = h and is the first one to do so; when
    // d = h every triple in the box qualifies.
    std::array<std::vector<long>, 3> below, upto;
    for (int i = 0; i < 3; ++i) {
      auto [lo, hi] = range(i, d, h);
      auto [lo1, hi1] = range(i, d, h - 1);
      for_class(cls[static_cast<std::size_t>(i)], m_[static_cast<std::size_t>(i)], lo, hi, [&](long n) { upto[static_cast<std::size_t>(i)].push_back(n); });
      for_class(cls[static_cast<std::size_t>(i)], m_[static_cast<std::size_t>(i)], lo1, hi1, [&](long n) { below[static_cast<std::size_t>(i)].push_back(n); });
    }
    if (d == h) {
      for (long a : upto[0])
        for (long b : upto[1])
          for (long c : upto[2]) emit(a, b, c);
      continue;
    }
    for (int i = 0; i < 3; ++i) {
      std::vector<long> edge;
      for (long n : upto[static_cast<std::size_t>(i)])
        if (std::abs(n) == h) edge.push_back(n);
      if (edge.empty()) continue;
      const auto& l0 = i == 0 ? edge : below[0];
      const auto& l1 = i == 1 ? edge : (i > 1 ? below[1] : upto[1]);
      const auto& l2 = i == 2 ? edge : upto[2];
      for (long a : l0)
        for (long b : l1)
          for (long c : l2) emit(a, b, c);
    }
  }
  return out;
}

std::array<Rational, 3> crt_parameter(const ParameterTargets& t, long height_bound) {
  if (height_bound < 1) throw DomainError("height bound must be >= 1");
  ParameterLattice lat(t);
  std::array<Rational, 3> x{};
  if (t.real) x = *t.real;
  std::optional<Rational> best;
  for (long d = 1; d <= height_bound; ++d) {
    if (!lat.admissible_denominator(d)) continue;
    ParameterPoint pt{d, {}};
    bool fits = true;
    for (int i = 0; i < 3; ++i) {
      const long m = lat.modulus(i);
      const long c = mod_long(static_cast<__int128>(d) * lat.residue(i), m);
      // Nearest n = c mod m to d * x_i.
      Integer k = ((Rational(d) * x[static_cast<std::size_t>(i)] - Rational(c)) / Rational(m)).round();
      Integer n = Integer(c) + Integer(m) * k;
      if (!n.fits_slong_p() || abs(n) > height_bound) {
        fits = false;
        break;
      }
      pt.n[static_cast<std::size_t>(i)] = n.get_si();
    }
    if (!fits) continue;
    long g = std::gcd(std::gcd(d, std::abs(pt.n[0])), std::gcd(std::abs(pt.n[1]), std::abs(pt.n[2])));
    if (g != 1) continue;
    std::array<Rational, 3> v = pt.value();
    if (!best || lat.distance2(v) < *best) best = lat.distance2(v);
    if (lat.within_radius(v)) return v;
  }
  std::string msg = "height bound " + std::to_string(height_bound) +
                    " too small: no parameter meeting the congruences";
  if (t.radius) msg += " lies within " + t.radius->str() + " of the real target";
  msg += " at height <= " + std::to_string(height_bound);
  if (best) msg += " (closest squared distance found: " + best->str() + ")";
  throw SearchExhausted(msg);
}

}  // namespace hmsl
