#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "hmsl/errors.hpp"
#include "hmsl/mpoly/binary_quartic.hpp"
#include "hmsl/mpoly/factor_modp.hpp"
#include "hmsl/mpoly/fq_roots.hpp"
#include "hmsl/mpoly/galois.hpp"
#include "hmsl/mpoly/hensel.hpp"
#include "hmsl/mpoly/int_forms.hpp"
#include "hmsl/mpoly/real_roots.hpp"
#include "hmsl/mpoly/restrict.hpp"
#include "hmsl/mpoly/symmetric.hpp"
#include "support/galois_oracle.hpp"

using namespace hmsl;

namespace {

using RPoly = SparsePoly<Rational>;
using Q4 = BinaryQuartic<Rational>;

Q4 quartic(long c4, long c3, long c2, long c1, long c0) {
  return {{Rational(c0), Rational(c1), Rational(c2), Rational(c3), Rational(c4)}};
}

using oracle::lin;
using oracle::mul_all;

Q4 as_quartic(const IntForm& f) { return quartic_from_form(f); }

}  // namespace

TEST_CASE("elementary symmetric polynomials") {
  RPoly s1 = elementary_symmetric(1);
  CHECK(s1.size() == 6);
  for (const auto& [e, c] : s1.terms()) CHECK(c == Rational(1));
  const long binom[] = {1, 6, 15, 20, 15, 6, 1};
  for (int k = 1; k <= 6; ++k) CHECK(elementary_symmetric(k).size() == static_cast<std::size_t>(binom[k]));
  std::vector<Rational> ones(6, Rational(1));
  CHECK(elementary_symmetric(2).evaluate(ones) == Rational(15));
  std::vector<Rational> pm{1, 1, 1, -1, -1, -1};
  CHECK(elementary_symmetric(4).evaluate(pm) == Rational(3));
  CHECK_THROWS_AS(elementary_symmetric(0), DomainError);
  CHECK_THROWS_AS(elementary_symmetric(7), DomainError);
}

TEST_CASE("product of linear factors expands into symmetric polynomials") {
  // Seven variables: s0..s5 and X.
  auto var = [](std::size_t i) { return RPoly::variable(7, i, Rational(1)); };
  RPoly prod = RPoly::constant(7, Rational(1));
  for (std::size_t i = 0; i < 6; ++i) prod *= var(6) - var(i);
  RPoly rhs = var(6).pow(6, Rational(1));
  std::vector<RPoly> embed_vars;
  for (std::size_t i = 0; i < 6; ++i) embed_vars.push_back(var(i));
  for (int k = 1; k <= 6; ++k) {
    RPoly sk = elementary_symmetric(k).substitute(embed_vars, Rational(1));
    RPoly term = sk * var(6).pow(static_cast<unsigned>(6 - k), Rational(1));
    rhs += k % 2 ? -term : term;
  }
  CHECK(prod == rhs);
}

TEST_CASE("restriction to a line") {
  std::vector<Rational> p{1, -1, 0, 0, 0, 0}, q{0, 0, 1, -1, 0, 0};
  CHECK(restrict_to_points(elementary_symmetric(1), p, q).is_zero());

  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rational> a, b;
    for (int i = 0; i < 6; ++i) {
      a.emplace_back(d(rng));
      b.emplace_back(d(rng), 1 + std::abs(d(rng)));
    }
    for (int k : {2, 4, 5}) {
      RPoly f = elementary_symmetric(k);
      RPoly r = restrict_to_points(f, a, b);
      CHECK((r.is_zero() || r.homogeneous_degree() == k));
      Rational t0(d(rng)), u0(d(rng), 3);
      std::vector<Rational> pt;
      for (int i = 0; i < 6; ++i) pt.push_back(t0 * a[i] + u0 * b[i]);
      CHECK(r.evaluate(std::vector<Rational>{t0, u0}) == f.evaluate(pt));
    }
  }
}

TEST_CASE("discriminant") {
  // t u (t - u)(t + u) = t^3 u - t u^3
  CHECK_FALSE(discriminant(quartic(0, 1, 0, -1, 0)).is_zero());
  CHECK(discriminant(quartic(0, 0, 1, 0, 0)).is_zero());
  CHECK_THROWS_AS(discriminant(quartic(0, 0, 0, 0, 0)), DomainError);
  Fq f25 = Fq::quadratic(5);
  BinaryQuartic<FqElt> f25_quartic{{FqElt(f25, 0), FqElt(f25, -24), FqElt(f25, 0), FqElt(f25, 0), FqElt(f25, 3)}};
  CHECK_FALSE(discriminant(f25_quartic).is_zero());
}

TEST_CASE("discriminant agrees with the invariant formula and with repeated roots") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> d(-6, 6);
  int zero_count = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Q4 q;
    if (trial % 3 == 0) {
      // Planted double root.
      IntForm l = lin(d(rng), d(rng));
      if (l[0] == 0 && l[1] == 0) continue;
      IntForm g{d(rng), d(rng), d(rng)};
      if (g == IntForm{0, 0, 0}) continue;
      q = as_quartic(mul_all({l, l, g}));
    } else {
      q = quartic(d(rng), d(rng), d(rng), d(rng), d(rng));
      if (q.degenerate()) continue;
    }
    Rational disc = discriminant(q);
    Rational I = invariant_I(q), J = invariant_J(q);
    CHECK(disc == (Rational(4) * I * I * I - J * J) / Rational(27));
    // Repeated projective root: gcd of the dehomogenized form and its
    // derivative, or a double root at [1:0].
    auto f = q.affine();
    bool repeated = (q.c[4].is_zero() && q.c[3].is_zero()) ||
                    gcd(f, f.derivative()).degree() > 0;
    CHECK(disc.is_zero() == repeated);
    if (repeated) ++zero_count;
  }
  CHECK(zero_count > 50);
}

TEST_CASE("real root counts") {
  CHECK(real_root_count(as_quartic(mul_all({lin(1, -1), lin(1, 1), lin(1, -2), lin(1, 2)}))) == 4);
  CHECK(real_root_count(quartic(1, 0, 0, 0, -1)) == 2);
  CHECK(real_root_count(quartic(1, 0, 0, 0, 1)) == 0);
  CHECK(real_root_count(quartic(0, 1, 0, -1, 0)) == 4);  // includes [1:0]
  CHECK_THROWS_AS(real_root_count(quartic(0, 0, 1, 0, 0)), DomainError);
}

TEST_CASE("Sturm counts agree with sign changes on a rational grid") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> d(-20, 20);
  int done = 0;
  while (done < 100) {
    Q4 q = quartic(d(rng), d(rng), d(rng), d(rng), d(rng));
    if (q.degenerate() || discriminant(q).is_zero()) continue;
    auto f = q.affine();
    if (f.degree() < 1) continue;
    // Cauchy bound on the affine roots.
    Rational bound(1);
    for (int i = 0; i < f.degree(); ++i) bound = std::max(bound, Rational(1) + (f.coeff(i) / f.leading()).abs());
    // Count sign changes on successively finer grids; for a squarefree
    // polynomial this converges to the number of real roots.
    int count = -1;
    for (int n = 64; n <= 16384; n *= 4) {
      int changes = 0;
      int last = 0;
      for (int i = 0; i <= n; ++i) {
        Rational x = -bound + Rational(2 * i, n) * bound;
        int s = f(x).sign();
        if (s == 0) {
          ++changes;  // grid point is an exact root
          last = 0;
          continue;
        }
        if (last != 0 && s != last) ++changes;
        last = s;
      }
      if (changes == count) break;
      count = changes;
    }
    int expected = count + (q.c[4].is_zero() ? 1 : 0);
    CHECK(real_root_count(q) == expected);
    ++done;
  }
}

TEST_CASE("roots over finite fields") {
  Fq f25 = Fq::quadratic(5);
  // -3t(8u^3 - t^3) = 3 t^4 - 24 t u^3.
  BinaryQuartic<FqElt> q{{FqElt(f25, 0), FqElt(f25, -24), FqElt(f25, 0), FqElt(f25, 0), FqElt(f25, 3)}};
  auto roots = roots_over_Fq(q, f25);
  REQUIRE(roots.size() == 4);
  FqElt om = FqElt::omega(f25);
  std::set<std::pair<long, long>> expect;
  for (FqElt x : {FqElt(f25, 0), FqElt(f25, 2), FqElt(f25, 2) * om, FqElt(f25, 2) * om * om})
    expect.insert({x.c0(), x.c1()});
  std::set<std::pair<long, long>> got;
  for (const auto& r : roots) {
    CHECK(r.multiplicity == 1);
    CHECK(r.u.is_one());
    got.insert({r.t.c0(), r.t.c1()});
  }
  CHECK(got == expect);

  // Brute force over all 26 points of P^1(F25).
  int zeros = 0;
  for (const FqElt& x : FqElt::elements(f25))
    if (q(x, FqElt(f25, 1)).is_zero()) ++zeros;
  if (q(FqElt(f25, 1), FqElt(f25, 0)).is_zero()) ++zeros;
  CHECK(zeros == 4);

  Fq f5 = Fq::prime_field(5);
  auto r5 = roots_over_Fq(reduce_quartic(as_quartic(mul_all({lin(1, 0), lin(1, -1), lin(1, -2), lin(1, -3)})), f5), f5);
  CHECK(r5.size() == 4);

  Fq f3 = Fq::prime_field(3);
  IntForm g = mul_all({lin(1, -1), lin(1, -1), IntForm{-2, 0, 1}});
  auto r3 = roots_over_Fq(reduce_quartic(as_quartic(g), f3), f3);
  REQUIRE(r3.size() == 1);
  CHECK(r3[0].t.c0() == 1);
  CHECK(r3[0].multiplicity == 2);
}

TEST_CASE("distinct roots over F25 match the derivative gcd") {
  Fq f5 = Fq::prime_field(5), f25 = Fq::quadratic(5);
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> d(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    BinaryQuartic<FqElt> q{{FqElt(f5, d(rng)), FqElt(f5, d(rng)), FqElt(f5, d(rng)), FqElt(f5, d(rng)), FqElt(f5, 1)}};
    auto f = q.affine();
    int excess = 4 - f.degree() + gcd(f, f.derivative()).degree();
    auto roots = roots_over_Fq(q, f25);
    int total = 0;
    for (const auto& r : roots) total += r.multiplicity;
    // Every root of a quartic over F5 lives in F5, F25 or F625; count the
    // multiplicity only for those in F25.
    if (total == 4) CHECK(static_cast<int>(roots.size()) == 4 - excess);
  }
}

TEST_CASE("factorization mod p") {
  std::mt19937_64 rng(37);
  for (long p : {3L, 5L, 7L, 11L}) {
    Fq field = Fq::prime_field(p);
    std::uniform_int_distribution<long> d(0, p - 1);
    for (int trial = 0; trial < 60; ++trial) {
      int deg = 1 + trial % 8;
      std::vector<FqElt> c;
      for (int i = 0; i < deg; ++i) c.emplace_back(field, d(rng));
      c.emplace_back(field, 1 + d(rng) % (p - 1));
      FpPoly f(c, FqElt(field, 0));
      if (trial % 4 == 0) f = f * f;
      auto fac = factor_mod_p(f);
      FpPoly prod(std::vector<FqElt>{f.leading()}, FqElt(field, 0));
      for (const auto& x : fac) {
        CHECK(x.poly.leading().is_one());
        for (int k = 0; k < x.multiplicity; ++k) prod = prod * x.poly;
        // Irreducible: no factor of degree <= deg/2, tested by gcd with
        // x^(p^k) - x.
        FpPoly xp(std::vector<FqElt>{FqElt(field, 0), FqElt(field, 1)}, FqElt(field, 0));
        FpPoly h = xp;
        for (int k = 1; 2 * k <= x.poly.degree(); ++k) {
          h = pow_mod(h, Integer(p), x.poly);
          CHECK(gcd(x.poly, h - xp).degree() == 0);
        }
      }
      CHECK(prod == f);
    }
  }
}

TEST_CASE("factorization over Q") {
  IntForm f = mul_all({IntForm{-2, 0, 1}, IntForm{-3, 0, 1}});
  auto fac = factor_over_Q(f);
  REQUIRE(fac.size() == 2);
  CHECK(form_degree(fac[0]) == 2);
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> d(-7, 7);
  for (int trial = 0; trial < 80; ++trial) {
    IntForm a{d(rng), d(rng), 1 + std::abs(d(rng))};
    IntForm b{d(rng), d(rng), d(rng)};
    IntForm g = form_mul(a, b);
    if (form_content(g) == 0) continue;
    DensePoly<Rational> gp(std::vector<Rational>(g.begin(), g.end()), Rational(0));
    if (gp.degree() >= 1 && gcd(gp, gp.derivative()).degree() > 0) continue;
    if (g.back() == 0 && g[g.size() - 2] == 0) continue;
    auto fs = factor_over_Q(g);
    IntForm prod{1};
    for (const auto& x : fs) prod = form_mul(prod, x);
    IntForm pg = primitive_part(g);
    CHECK((prod == pg || form_sub(IntForm(prod.size(), Integer(0)), prod) == pg));
    CHECK(fs.size() >= 2 - (form_degree(b) == 0 ? 1 : 0));
  }
}

TEST_CASE("quartic Galois groups agree with the Frobenius oracle") {
  auto bat = oracle::battery();
  CHECK(bat.size() >= 40);
  std::set<std::string> labels;
  for (const auto& e : bat) {
    CAPTURE(Q4(as_quartic(e.form)).str());
    Q4 q = as_quartic(e.form);
    QuarticGaloisGroup g = quartic_galois_group(q);
    CHECK(g.name() == e.label);
    CHECK(g.order == e.order);
    CHECK(24 % g.order == 0);
    CHECK(g.solvable());
    labels.insert(g.name());

    std::set<std::string> types = oracle::frobenius_types(q, 60);
    std::vector<int> degs = g.factor_degrees;
    auto [label, order] = oracle::infer(types, degs.size() == 1, degs);
    CHECK(label == e.label);
    CHECK(order == e.order);
  }
  CHECK(labels.size() == 8);
}

TEST_CASE("local splitting: distinct reduction") {
  auto rep = hensel_factor_quartic(as_quartic(mul_all({lin(1, 0), lin(1, -1), lin(1, -2), lin(1, -3)})), 5, 8);
  CHECK(rep.squarefree_mod_p);
  CHECK(rep.verdict == LocalVerdict::Unramified);
  CHECK(rep.residue_degree == 1);
  CHECK(rep.roots.size() == 4);
}

TEST_CASE("local splitting: even discriminant valuations") {
  auto rep = hensel_factor_quartic(as_quartic(mul_all({IntForm{-18, 0, 1}, IntForm{-2, 0, 1}})), 3, 10);
  CHECK(rep.verdict == LocalVerdict::Unramified);
  CHECK_FALSE(rep.squarefree_mod_p);
  bool saw_even = false;
  for (const auto& b : rep.blocks) {
    if (b.kind == BlockKind::RepeatedQuadratic) {
      REQUIRE(b.disc_valuation);
      CHECK(*b.disc_valuation == Valuation::exact(2));
      saw_even = true;
    }
  }
  CHECK(saw_even);
  // t^2 - 2u^2 is irreducible mod 3 and t^2 - 18u^2 = t^2 - 2(3u)^2 splits
  // over the same quadratic extension.
  CHECK(rep.residue_degree == 2);
  CHECK(rep.roots.size() == 4);
}

TEST_CASE("local splitting: odd discriminant valuation is inconclusive") {
  auto rep = hensel_factor_quartic(as_quartic(mul_all({IntForm{-3, 0, 1}, IntForm{-2, 0, 1}})), 3, 10);
  CHECK(rep.verdict == LocalVerdict::Inconclusive);
  bool saw_odd = false;
  for (const auto& b : rep.blocks)
    if (b.disc_valuation && *b.disc_valuation == Valuation::exact(1)) saw_odd = true;
  CHECK(saw_odd);
  CHECK(rep.roots.empty());
}

TEST_CASE("local splitting: precision exhaustion") {
  // (t^2 - 3^12 * 2 u^2)(t^2 - 2u^2): the block discriminant vanishes to 10 digits.
  IntForm f = mul_all({IntForm{Integer(-2) * pow(Integer(3), 12), 0, 1}, IntForm{-2, 0, 1}});
  CHECK_THROWS_AS(hensel_factor_quartic(as_quartic(f), 3, 10), PrecisionError);
  CHECK(hensel_factor_quartic(as_quartic(f), 3, 20).verdict == LocalVerdict::Unramified);
}

TEST_CASE("Hensel-lifted roots are roots to the working precision") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<long> d(-30, 30);
  int checked = 0;
  for (int trial = 0; trial < 300 && checked < 60; ++trial) {
    Q4 q = quartic(d(rng), d(rng), d(rng), d(rng), d(rng));
    if (q.degenerate() || discriminant(q).is_zero()) continue;
    for (long p : {3L, 5L}) {
      LocalFactorization rep;
      try {
        rep = hensel_factor_quartic(q, p, 12);
      } catch (const PrecisionError&) {
        continue;
      }
      if (rep.verdict != LocalVerdict::Unramified) continue;
      CHECK(rep.roots.size() == 4);
      for (const auto& r : rep.roots) {
        long n = r[0].ring()->precision();
        CHECK((r[0].is_unit() || r[1].is_unit()));
        auto ring = r[0].ring();
        UnramifiedElt val = evaluate_form(rep.form, r[0], r[1]);
        CHECK(val.valuation().value >= n);
      }
      ++checked;
    }
  }
  CHECK(checked >= 40);
}

TEST_CASE("local splitting: repeated block with a root at 0 or infinity") {
  // t (t - 9u) and u (u - 9t) reduce to squares mod 3; the exact roots [0:1]
  // and [1:0] leave a zero end coefficient in the lifted block.
  for (const IntForm& block : {IntForm{0, -9, 1}, IntForm{1, -9, 0}}) {
    auto rep = hensel_factor_quartic(as_quartic(mul_all({block, IntForm{-2, 0, 1}})), 3, 12);
    CHECK(rep.verdict == LocalVerdict::Unramified);
    REQUIRE(rep.roots.size() == 4);
    for (const auto& r : rep.roots) {
      CHECK((r[0].is_unit() || r[1].is_unit()));
      CHECK(evaluate_form(rep.form, r[0], r[1]).valuation().value >= 12 - 2);
    }
  }
}
