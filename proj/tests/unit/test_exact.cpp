#include <random>

#include "doctest.h"
#include "hmsl/errors.hpp"
#include "hmsl/exact/cyclo.hpp"
#include "hmsl/exact/finite_field.hpp"
#include "hmsl/exact/padic.hpp"
#include "hmsl/exact/rational.hpp"
#include "hmsl/exact/unramified.hpp"

using namespace hmsl;

TEST_CASE("rationals are canonical") {
  Rational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(Rational::parse("-12/8") == r);
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK(Rational(7, 2).round() == 3);  // ties round down
  CHECK(Rational(-7, 2).floor() == -4);
}

TEST_CASE("rational arithmetic is exact") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  for (int i = 0; i < 200; ++i) {
    long a = d(rng), b = d(rng);
    if (a == 0 || b == 0) continue;
    Rational x(a, b);
    CHECK(x * Rational(b, a) == Rational(1));
    CHECK(x - x == Rational(0));
  }
}

TEST_CASE("cyclotomic conjugation") {
  CHECK(galois_conjugate(Cyclo::omega()) == Cyclo(-1, -1));
  CHECK(galois_conjugate(Cyclo(5)) == Cyclo(5));
  CHECK(galois_conjugate(Cyclo::sqrt_minus3()) == -Cyclo::sqrt_minus3());
  Cyclo w = Cyclo::omega();
  CHECK(w * w + w + Cyclo(1) == Cyclo(0));
  CHECK(Cyclo::sqrt_minus3() * Cyclo::sqrt_minus3() == Cyclo(-3));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-50, 50);
  for (int i = 0; i < 100; ++i) {
    Cyclo x(Rational(d(rng), 7), Rational(d(rng), 3));
    CHECK(galois_conjugate(galois_conjugate(x)) == x);
    if (!x.is_zero()) CHECK(x * x.inverse() == Cyclo(1));
  }
}

TEST_CASE("p-adic valuations") {
  CHECK(valuation(lift_to_padic(Rational(50), 5, 4)) == Valuation::exact(2));
  Valuation z = valuation(PadicApprox::zero(3, 6));
  CHECK_FALSE(z.certified);
  CHECK(z.value == 6);
  CHECK(z.str() == ">=6");
  CHECK(valuation(lift_to_padic(Rational(729), 5, 4)) == Valuation::exact(0));
}

TEST_CASE("lifting rationals") {
  PadicApprox x = lift_to_padic(Rational(1, 3), 5, 3);
  CHECK(x.valuation_field() == 0);
  CHECK(x.unit() == 42);
  PadicApprox y = lift_to_padic(Rational(18), 3, 4);
  CHECK(y.valuation_field() == 2);
  CHECK(y.unit() == 2);
  CHECK_THROWS_AS(lift_to_padic(Rational(0), 3, 4), DomainError);
  CHECK(lift_to_padic(Rational(2, 45), 3, 5).valuation_field() == -2);
}

TEST_CASE("p-adic valuation laws") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-5000, 5000);
  for (int i = 0; i < 300; ++i) {
    long a = d(rng), b = d(rng);
    if (a == 0 || b == 0) continue;
    PadicApprox x = lift_to_padic(Rational(a), 5, 8);
    PadicApprox y = lift_to_padic(Rational(b, 7), 5, 6);
    Valuation vx = valuation(x), vy = valuation(y);
    Valuation vxy = valuation(x * y);
    REQUIRE(vxy.certified);
    CHECK(vxy.value == vx.value + vy.value);
    Valuation vs = valuation(x + y);
    CHECK(vs.value >= std::min(vx.value, vy.value));
    // The approximant is congruent to the exact sum.
    Rational exact = Rational(a) + Rational(b, 7);
    if (vs.certified) CHECK(vs.value == valuation(exact, 5));
  }
}

TEST_CASE("cancellation becomes indeterminate, never fake zero") {
  PadicApprox x = lift_to_padic(Rational(1), 3, 4);
  PadicApprox y = lift_to_padic(Rational(1 + 81 * 5), 3, 10);
  PadicApprox d = x - y;
  CHECK(d.is_indeterminate());
  CHECK(valuation(d) == Valuation::at_least(4));
  CHECK_THROWS_AS(d.inverse(), PrecisionError);
}

TEST_CASE("F25 arithmetic") {
  Fq f = Fq::quadratic(5);
  FqElt w = FqElt::sqrt_minus3(f);
  CHECK(w.c0() == 0);
  CHECK(w.c1() == 1);
  CHECK((w * w + FqElt(f, 3)).is_zero());
  int nonzero = 0;
  for (const FqElt& x : FqElt::elements(f)) {
    if (x.is_zero()) continue;
    ++nonzero;
    CHECK(x.pow(24).is_one());
    CHECK((x * x.inverse()).is_one());
  }
  CHECK(nonzero == 24);
  FqElt om = FqElt::omega(f);
  CHECK((om * om + om + FqElt(f, 1)).is_zero());
  CHECK(FqElt::from_rational(f, Rational(1, 3)) * FqElt(f, 3) == FqElt(f, 1));
}

TEST_CASE("unramified rings") {
  auto ring = UnramifiedRing::make(3, 2, 6);
  CHECK(ring->degree() == 2);
  auto g = UnramifiedElt::generator(ring);
  CHECK(g.is_unit());
  auto inv = g.inverse();
  CHECK(g * inv == UnramifiedElt::from_integer(ring, 1));
  // The residue field has 9 elements and all nonzero ones satisfy x^8 = 1.
  auto r1 = UnramifiedRing::make(3, 2, 1);
  auto els = UnramifiedElt::residue_elements(r1);
  CHECK(els.size() == 9);
  for (const auto& x : els)
    if (!x.is_zero()) CHECK(x.pow(8) == UnramifiedElt::from_integer(r1, 1));
  auto nine = UnramifiedElt::from_integer(ring, 18);
  CHECK(nine.valuation() == Valuation::exact(2));
  CHECK(nine.divide_by_p_power(2) == UnramifiedElt::from_integer(ring->with_precision(4), 2));
}
