#include "hmsl/mpoly/factor_modp.hpp"

#include <algorithm>
#include <utility>

#include "hmsl/errors.hpp"

namespace hmsl {
namespace {

FpPoly constant(const Fq& f, long c) {
  return FpPoly(std::vector<FqElt>{FqElt(f, c)}, FqElt(f, 0));
}

FpPoly x_poly(const Fq& f) {
  return FpPoly(std::vector<FqElt>{FqElt(f, 0), FqElt(f, 1)}, FqElt(f, 0));
}

bool is_one(const FpPoly& g) { return g.degree() == 0; }

// g(x) = h(x^p) over F_p; returns h.
FpPoly pth_root(const FpPoly& g, long p) {
  std::vector<FqElt> c;
  for (int i = 0; i <= g.degree(); i += static_cast<int>(p)) c.push_back(g.coeff(i));
  return FpPoly(std::move(c), g.zero());
}

void squarefree(const FpPoly& f, long p, int scale, std::vector<std::pair<FpPoly, int>>& out) {
  FpPoly c = gcd(f, f.derivative());
  FpPoly w = f / c;
  int i = 1;
  while (!is_one(w)) {
    FpPoly y = gcd(w, c);
    FpPoly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i * scale);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) squarefree(pth_root(c, p).monic(), p, scale * static_cast<int>(p), out);
}

// Trial polynomial number n: the base-p digits of n as coefficients.
FpPoly trial(long n, const Fq& field, int max_degree) {
  std::vector<FqElt> c;
  while (n > 0 && static_cast<int>(c.size()) <= max_degree) {
    c.emplace_back(field, n % field.p);
    n /= field.p;
  }
  return FpPoly(std::move(c), FqElt(field, 0));
}

void equal_degree(const FpPoly& g, int d, std::vector<FpPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const Fq& field = g.zero().field();
  Integer q = pow(Integer(field.p), static_cast<unsigned long>(d));
  Integer e = (q - 1) / 2;
  for (long n = field.p;; ++n) {
    FpPoly a = trial(n, field, g.degree() - 1);
    if (a.degree() < 1) continue;
    FpPoly b = pow_mod(a, e, g) - constant(field, 1);
    FpPoly h = gcd(g, b);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, out);
      equal_degree((g / h).monic(), d, out);
      return;
    }
  }
}

bool poly_less(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeff(i).c0() != b.coeff(i).c0()) return a.coeff(i).c0() < b.coeff(i).c0();
  }
  return false;
}

}  // namespace

std::vector<FpFactor> factor_mod_p(const FpPoly& f) {
  if (f.is_zero()) throw DomainError("factorization of the zero polynomial");
  const Fq& field = f.zero().field();
  if (field.degree != 1) throw DomainError("factor_mod_p works over prime fields");
  if (field.p == 2) throw DomainError("factor_mod_p needs an odd prime");
  std::vector<FpFactor> result;
  if (f.degree() == 0) return result;

  std::vector<std::pair<FpPoly, int>> sqf;
  squarefree(f.monic(), field.p, 1, sqf);
  for (auto& [g0, mult] : sqf) {
    FpPoly g = g0;
    FpPoly h = x_poly(field);
    const FpPoly x = x_poly(field);
    for (int d = 1; 2 * d <= g.degree(); ++d) {
      h = pow_mod(h, Integer(field.p), g);
      FpPoly dd = gcd(g, h - x);
      if (dd.degree() > 0) {
        std::vector<FpPoly> parts;
        equal_degree(dd, d, parts);
        for (auto& p : parts) result.push_back({std::move(p), mult});
        g = (g / dd).monic();
        h = h % g;
      }
    }
    if (g.degree() > 0) result.push_back({g, mult});
  }
  std::sort(result.begin(), result.end(), [](const FpFactor& a, const FpFactor& b) {
    if (poly_less(a.poly, b.poly)) return true;
    if (poly_less(b.poly, a.poly)) return false;
    return a.multiplicity < b.multiplicity;
  });
  return result;
}

}  // namespace hmsl
