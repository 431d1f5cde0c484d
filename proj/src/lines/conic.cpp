#include "hmsl/lines/conic.hpp"

#include <algorithm>

#include "hmsl/errors.hpp"

namespace hmsl {

namespace {

bool probably_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

Integer pollard_brent(const Integer& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, ys, q = 1, g = 1;
    auto f = [&](const Integer& v) { return mod(Integer(v * v + c), n); };
    const unsigned long m = 64;
    unsigned long r = 1;
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mod(Integer(q * abs(Integer(x - y))), n);
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(Integer(abs(Integer(x - ys))), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(Integer n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (probably_prime(n)) {
    out.push_back(n);
    return;
  }
  Integer d = pollard_brent(n);
  factor_into(d, out);
  factor_into(Integer(n / d), out);
}

}  // namespace

std::vector<Integer> factor_integer(const Integer& n) {
  if (n == 0) throw DomainError("factorization of zero");
  Integer m = abs(n);
  std::vector<Integer> out;
  for (unsigned long p = 2; p < 10000 && Integer(p) * p <= m; ++p) {
    while (m % p == 0) {
      out.push_back(Integer(p));
      m /= p;
    }
  }
  factor_into(m, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Integer> sqrt_mod_prime(const Integer& a0, const Integer& p) {
  Integer a = mod(a0, p);
  if (a == 0) return Integer(0);
  if (p == 2) return a;
  if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;
  Integer r;
  auto powm = [&](const Integer& b, const Integer& e) {
    Integer out;
    mpz_powm(out.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return out;
  };
  // Tonelli-Shanks.
  Integer q = p - 1;
  long s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Integer z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
  Integer c = powm(z, q), t = powm(a, q);
  r = powm(a, Integer((q + 1) / 2));
  long mm = s;
  while (t != 1) {
    long i = 0;
    Integer tt = t;
    while (tt != 1) {
      tt = mod(Integer(tt * tt), p);
      ++i;
    }
    Integer b = c;
    for (long j = 0; j < mm - i - 1; ++j) b = mod(Integer(b * b), p);
    r = mod(Integer(r * b), p);
    c = mod(Integer(b * b), p);
    t = mod(Integer(t * c), p);
    mm = i;
  }
  return r;
}

std::optional<Integer> sqrt_mod_squarefree(const Integer& a, const Integer& n) {
  if (n <= 0) throw DomainError("modulus must be positive");
  Integer x = 0, m = 1;
  for (const Integer& p : factor_integer(n)) {
    if (p == 1) continue;
    auto r = sqrt_mod_prime(a, p);
    if (!r) return std::nullopt;
    // CRT: x = x mod m, x = r mod p.
    Integer k = mod(Integer((*r - x) * inverse_mod(m, p)), p);
    x += m * k;
    m *= p;
  }
  return mod(x, m);
}

std::optional<std::array<Integer, 3>> legendre_solve(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) throw DomainError("Legendre equation needs nonzero coefficients");
  if (a == 1) return std::array<Integer, 3>{1, 1, 0};
  if (b == 1) return std::array<Integer, 3>{1, 0, 1};
  if (a + b == 0) return std::array<Integer, 3>{0, 1, 1};
  if (a < 0 && b < 0) return std::nullopt;
  if (abs(a) > abs(b)) {
    auto s = legendre_solve(b, a);
    if (!s) return std::nullopt;
    return std::array<Integer, 3>{(*s)[0], (*s)[2], (*s)[1]};
  }
  // |a| <= |b|, |b| >= 2.
  Integer bb = abs(b);
  auto t0 = sqrt_mod_squarefree(a, bb);
  if (!t0) return std::nullopt;
  Integer t = *t0;
  if (2 * t > bb) t -= bb;
  Integer k = (t * t - a) / b;
  if (k == 0) throw DomainError("Legendre descent reached a square coefficient");
  // k = k' m^2 with k' squarefree.
  Integer kp = k < 0 ? Integer(-1) : Integer(1), msq = 1;
  std::vector<Integer> fs = factor_integer(k);
  for (std::size_t i = 0; i < fs.size();) {
    std::size_t j = i;
    while (j < fs.size() && fs[j] == fs[i]) ++j;
    const std::size_t e = j - i;
    for (std::size_t r = 0; r < e / 2; ++r) msq *= fs[i];
    if (e % 2) kp *= fs[i];
    i = j;
  }
  auto s = legendre_solve(a, kp);
  if (!s) return std::nullopt;
  const Integer &X = (*s)[0], &Y = (*s)[1], &Z = (*s)[2];
  Integer x = t * X + a * Y, y = X + t * Y, z = kp * msq * Z;
  Integer g = gcd(gcd(x, y), z);
  if (g == 0) throw DomainError("Legendre descent produced the zero vector");
  return std::array<Integer, 3>{x / g, y / g, z / g};
}

}  // namespace hmsl
