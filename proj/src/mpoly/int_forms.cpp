#include "hmsl/mpoly/int_forms.hpp"

#include <algorithm>
#include <numeric>

#include "hmsl/errors.hpp"
#include "hmsl/exact/matrix.hpp"

namespace hmsl {

int form_degree(const IntForm& f) { return static_cast<int>(f.size()) - 1; }

IntForm form_mul(const IntForm& a, const IntForm& b) {
  if (a.empty() || b.empty()) throw DomainError("empty binary form");
  IntForm r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

IntForm form_sub(const IntForm& a, const IntForm& b) {
  if (a.size() != b.size()) throw DomainError("forms of different degree");
  IntForm r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

Integer form_content(const IntForm& f) {
  Integer g(0);
  for (const Integer& x : f) g = gcd(g, x);
  return g;
}

IntForm primitive_part(const IntForm& f) {
  Integer g = form_content(f);
  if (g == 0) throw DomainError("primitive part of the zero form");
  IntForm r;
  for (const Integer& x : f) r.push_back(x / g);
  for (std::size_t i = r.size(); i-- > 0;) {
    if (r[i] == 0) continue;
    if (r[i] < 0)
      for (Integer& x : r) x = -x;
    break;
  }
  return r;
}

IntForm form_symmetric_mod(const IntForm& f, const Integer& m) {
  IntForm r;
  for (const Integer& x : f) r.push_back(symmetric_mod(x, m));
  return r;
}

IntForm primitive_integral(const BinaryQuartic<Rational>& q) {
  q.require_nondegenerate();
  Integer l(1);
  for (const Rational& x : q.c) l = lcm(l, x.denominator());
  IntForm f;
  for (const Rational& x : q.c) f.push_back(x.numerator() * (l / x.denominator()));
  return primitive_part(f);
}

BinaryQuartic<Rational> quartic_from_form(const IntForm& f) {
  if (f.size() != 5) throw DomainError("form is not a quartic");
  return {{Rational(f[0]), Rational(f[1]), Rational(f[2]), Rational(f[3]), Rational(f[4])}};
}

FpPoly form_mod_p(const IntForm& f, const Fq& field) {
  std::vector<FqElt> c;
  for (const Integer& x : f) c.push_back(FqElt::from_rational(field, Rational(x)));
  return FpPoly(std::move(c), FqElt(field, 0));
}

IntForm form_from_fp(const FpPoly& g, int degree) {
  if (g.degree() > degree) throw DomainError("polynomial degree exceeds form degree");
  IntForm r;
  for (int i = 0; i <= degree; ++i) r.emplace_back(g.coeff(static_cast<std::size_t>(i)).c0());
  return r;
}

bool form_divides(const IntForm& g, const IntForm& f, IntForm* quotient) {
  const int dg = form_degree(g), df = form_degree(f);
  if (dg > df) return false;
  std::vector<Rational> gc(g.begin(), g.end()), fc(f.begin(), f.end());
  DensePoly<Rational> gp(gc, Rational(0)), fp(fc, Rational(0));
  if (gp.is_zero()) throw DomainError("division by the zero form");
  auto [q, r] = fp.divmod(gp);
  if (!r.is_zero() || q.degree() > df - dg) return false;
  IntForm out;
  for (int i = 0; i <= df - dg; ++i) {
    const Rational c = q.coeff(static_cast<std::size_t>(i));
    if (!c.is_integer()) return false;
    out.push_back(c.numerator());
  }
  if (quotient) *quotient = std::move(out);
  return true;
}

namespace {

// Solves A*h + g*B = e mod p for forms A (degree dg) and B (degree dh).
std::pair<IntForm, IntForm> solve_bezout(const IntForm& g, const IntForm& h,
                                         const IntForm& e, long p) {
  const Fq field = Fq::prime_field(p);
  const FqElt zero(field, 0);
  const int dg = form_degree(g), dh = form_degree(h), n = dg + dh;
  Matrix<FqElt> m(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n + 2), zero);
  auto elt = [&](const Integer& x) { return FqElt::from_rational(field, Rational(x)); };
  for (int i = 0; i <= dg; ++i)
    for (int j = 0; j <= dh; ++j) m(static_cast<std::size_t>(i + j), static_cast<std::size_t>(i)) += elt(h[static_cast<std::size_t>(j)]);
  for (int j = 0; j <= dh; ++j)
    for (int i = 0; i <= dg; ++i) m(static_cast<std::size_t>(i + j), static_cast<std::size_t>(dg + 1 + j)) += elt(g[static_cast<std::size_t>(i)]);
  std::vector<FqElt> rhs;
  for (const Integer& x : e) rhs.push_back(elt(x));
  auto sol = m.solve(rhs, zero);
  if (!sol) throw DomainError("Hensel factors are not coprime modulo p");
  IntForm a, b;
  for (int i = 0; i <= dg; ++i) a.emplace_back((*sol)[static_cast<std::size_t>(i)].c0());
  for (int j = 0; j <= dh; ++j) b.emplace_back((*sol)[static_cast<std::size_t>(dg + 1 + j)].c0());
  return {a, b};
}

std::pair<IntForm, IntForm> lift_pair(const IntForm& f, IntForm g, IntForm h, long p, long n) {
  const Integer pp(p);
  const IntForm g0 = g, h0 = h;
  Integer pk = pp;
  for (long k = 1; k < n; ++k) {
    IntForm e = form_sub(f, form_mul(g, h));
    for (Integer& x : e) {
      if (mod(x, pk) != 0) throw DomainError("Hensel factors do not multiply to the form");
      x /= pk;
    }
    auto [a, b] = solve_bezout(g0, h0, e, p);
    for (std::size_t i = 0; i < g.size(); ++i) g[i] += pk * a[i];
    for (std::size_t j = 0; j < h.size(); ++j) h[j] += pk * b[j];
    pk *= pp;
  }
  IntForm e = form_sub(f, form_mul(g, h));
  for (const Integer& x : e)
    if (mod(x, pk) != 0) throw DomainError("Hensel factors do not multiply to the form");
  return {form_symmetric_mod(g, pk), form_symmetric_mod(h, pk)};
}

}  // namespace

std::vector<IntForm> hensel_lift_forms(const IntForm& f,
                                       const std::vector<FpFormFactor>& factors,
                                       long p, long n) {
  if (factors.empty()) throw DomainError("no factors to lift");
  if (n < 1) throw DomainError("Hensel precision must be positive");
  int total = 0;
  for (const auto& fac : factors) total += fac.degree;
  if (total != form_degree(f)) throw DomainError("factor degrees do not add up");
  const Fq field = Fq::prime_field(p);
  const Integer pn = pow(Integer(p), static_cast<unsigned long>(n));

  // Scale the first factor by the unit that makes the product match.
  FpPoly prod = form_mod_p(IntForm{1}, field);
  for (const auto& fac : factors) prod = prod * fac.poly;
  FpPoly target = form_mod_p(f, field);
  if (prod.is_zero() || target.is_zero() || prod.degree() != target.degree()) {
    throw DomainError("Hensel factors do not multiply to the form");
  }
  FqElt unit = target.leading() / prod.leading();

  std::vector<IntForm> out;
  IntForm rest = f;
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    FpPoly gi = i == 0 ? factors[i].poly.scaled(unit) : factors[i].poly;
    FpPoly hi = form_mod_p(IntForm{1}, field);
    int dh = 0;
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      hi = hi * factors[j].poly;
      dh += factors[j].degree;
    }
    auto [g, h] = lift_pair(rest, form_from_fp(gi, factors[i].degree), form_from_fp(hi, dh), p, n);
    out.push_back(g);
    rest = h;
  }
  if (factors.size() == 1) {
    out.push_back(form_symmetric_mod(f, pn));
  } else {
    out.push_back(rest);
  }
  return out;
}

namespace {

bool squarefree_mod(const IntForm& f, const Fq& field) {
  FpPoly g = form_mod_p(f, field);
  return gcd(g, g.derivative()).degree() == 0;
}

bool form_less(const IntForm& a, const IntForm& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

// Zassenhaus on a primitive form whose top t-coefficient is nonzero.
void zassenhaus(const IntForm& f, std::vector<IntForm>& out) {
  const int d = form_degree(f);
  if (d <= 1) {
    out.push_back(primitive_part(f));
    return;
  }
  const Integer lc = f.back();
  long p = 3;
  for (;; p = next_prime(p)) {
    if (p > 10000) throw DomainError("no good prime for factorization");
    if (mod(lc, Integer(p)) == 0) continue;
    if (squarefree_mod(f, Fq::prime_field(p))) break;
  }
  const Fq field = Fq::prime_field(p);
  std::vector<FpFactor> fac = factor_mod_p(form_mod_p(f, field));
  if (fac.size() == 1) {
    out.push_back(primitive_part(f));
    return;
  }
  // Coefficients of a factor are bounded by 2^d * |lc| * sum |c_i|.
  Integer norm(0);
  for (const Integer& x : f) norm += abs(x);
  Integer bound = Integer(2) * pow(Integer(2), static_cast<unsigned long>(d)) * abs(lc) * norm;
  long n = 1;
  Integer pn(p);
  while (pn <= bound) {
    pn *= p;
    ++n;
  }
  std::vector<FpFormFactor> ff;
  for (const auto& x : fac) ff.push_back({x.poly, x.poly.degree()});
  std::vector<IntForm> lifted = hensel_lift_forms(f, ff, p, n);
  for (IntForm& g : lifted) {
    Integer inv = inverse_mod(g.back(), pn);
    for (Integer& c : g) c = symmetric_mod(c * inv, pn);
  }

  IntForm cur = f;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<bool> pick(lifted.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(s), true);
    do {
      IntForm g{cur.back()};
      for (std::size_t i = 0; i < lifted.size(); ++i)
        if (pick[i]) g = form_symmetric_mod(form_mul(g, lifted[i]), pn);
      g = primitive_part(g);
      IntForm quo;
      if (form_divides(g, cur, &quo)) {
        out.push_back(g);
        cur = quo;
        std::vector<IntForm> keep;
        for (std::size_t i = 0; i < lifted.size(); ++i)
          if (!pick[i]) keep.push_back(lifted[i]);
        lifted = std::move(keep);
        found = true;
        break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (!found) ++s;
  }
  if (form_degree(cur) > 0) out.push_back(primitive_part(cur));
}

}  // namespace

std::vector<IntForm> factor_over_Q(const IntForm& f) {
  if (f.empty()) throw DomainError("empty form");
  IntForm cur = primitive_part(f);
  std::vector<IntForm> out;
  // Factors of u correspond to vanishing top t-coefficients.
  while (cur.size() > 1 && cur.back() == 0) {
    out.push_back(IntForm{1, 0});
    cur.pop_back();
  }
  if (out.size() > 1) throw DomainError("factor_over_Q needs a squarefree form");
  if (form_degree(cur) > 0) {
    DensePoly<Rational> fp(std::vector<Rational>(cur.begin(), cur.end()), Rational(0));
    if (gcd(fp, fp.derivative()).degree() > 0) {
      throw DomainError("factor_over_Q needs a squarefree form");
    }
    zassenhaus(cur, out);
  }
  std::sort(out.begin(), out.end(), form_less);
  return out;
}

}  // namespace hmsl
