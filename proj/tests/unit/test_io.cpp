#include <random>

#include "doctest.h"
#include "hmsl/errors.hpp"
#include "hmsl/io/json.hpp"
#include "hmsl/lines/target.hpp"
#include "hmsl/search/config.hpp"

using namespace hmsl;

namespace {

template <class S>
void round_trip(const S& x) {
  Json j = to_json(x);
  CHECK(scalar_from_json<S>(j) == x);
  // Text form survives a dump and reparse unchanged.
  CHECK(Json::parse(j.dump()) == j);
}

}  // namespace

TEST_CASE("rational text is always num/den") {
  CHECK(rational_text(Rational(3)) == "3/1");
  CHECK(rational_text(Rational(-6, 4)) == "-3/2");
  CHECK(rational_from_json(Json("7")) == 7);
  CHECK(rational_from_json(Json("-14/6")) == Rational(-7, 3));
  CHECK(rational_from_json(Json(5)) == 5);
  CHECK(rational_from_json(to_json(Rational(2, 9))) == Rational(2, 9));
  CHECK_THROWS_AS(rational_from_json(Json("1/0")), ConfigError);
  CHECK_THROWS_AS(rational_from_json(Json("one")), ConfigError);
  CHECK_THROWS_AS(rational_from_json(Json(1.5)), ConfigError);
  CHECK_THROWS_AS(rational_from_json(Json::array()), ConfigError);
}

TEST_CASE("scalar round trips") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (int i = 0; i < 50; ++i) {
    long den = d(rng);
    if (den == 0) den = 1;
    round_trip(Rational(d(rng), den));
    round_trip(Integer(Integer(d(rng)) * d(rng) * 1000003));
    round_trip(Cyclo(Rational(d(rng), 7), Rational(d(rng), 3)));
  }
  Fq f25 = Fq::quadratic(5);
  for (std::int64_t a = 0; a < 5; ++a)
    for (std::int64_t b = 0; b < 5; ++b) round_trip(FqElt(f25, a, b));
  round_trip(FqElt(Fq::prime_field(7), 3));
  round_trip(PadicApprox(5, -2, Integer(17), 9));
  round_trip(PadicApprox::zero(3, 6));
  round_trip(PadicApprox::exact_zero(5));
  auto ring = UnramifiedRing::make(3, 2, 7);
  round_trip(UnramifiedElt(ring, {Integer(11), Integer(-4)}));
  round_trip(UnramifiedElt::generator(UnramifiedRing::make(5, 4, 3)));
}

TEST_CASE("scalar objects are typed") {
  CHECK(to_json(Rational(1, 2)) == Json{{"type", "rational"}, {"value", "1/2"}});
  CHECK(to_json(PadicApprox::exact_zero(5)).at("precision").is_null());
  // Rationals embed into Q(omega), so twist entries may be written plainly.
  CHECK(scalar_from_json<Cyclo>(to_json(Rational(1, 2))) == Cyclo(Rational(1, 2)));
  CHECK(scalar_from_json<Cyclo>(Json("3")) == Cyclo(3));
  CHECK_THROWS_AS(scalar_from_json<Cyclo>(to_json(FqElt(Fq::quadratic(5), 1, 1))), ConfigError);
  CHECK_THROWS_AS(scalar_from_json<FqElt>(Json{{"type", "fq"}}), ConfigError);
}

TEST_CASE("polynomial round trip") {
  SparsePoly<Rational> f(3);
  f.add_term({2, 0, 1}, Rational(3, 4));
  f.add_term({0, 1, 0}, Rational(-5));
  f.add_term({0, 0, 0}, Rational(1, 3));
  Json j = to_json(f);
  CHECK(j.size() == 3);
  CHECK(j[0].at("exp") == Json{2, 0, 1});
  CHECK(poly_from_json<Rational>(j, 3) == f);
  CHECK_THROWS_AS(poly_from_json<Rational>(j, 2), ConfigError);
  CHECK_THROWS_AS(poly_from_json<Rational>(Json::object(), 3), ConfigError);
}

TEST_CASE("lines and targets") {
  Line<Rational> l = reference_real_line();
  Json j = to_json(l);
  Line<Rational> back = line_from_json(j);
  CHECK(back.p() == l.p());
  CHECK(back.q() == l.q());
  // Any two spanning points give the same canonical line.
  std::vector<Rational> p = reference_real_point(), d = reference_real_direction(), a(6), b(6);
  for (std::size_t i = 0; i < 6; ++i) {
    a[i] = p[i] + 3 * d[i];
    b[i] = Rational(-2) * p[i] + d[i];
  }
  Json pair = Json::array({to_json(a), to_json(b)});
  CHECK(to_json(line_from_json(pair)) == j);
  CHECK_THROWS_AS(line_from_json(Json::array({to_json(a), to_json(a)})), ConfigError);
  CHECK_THROWS_AS(line_from_json(Json{{"p", {"1", "2"}}, {"q", {"3", "4"}}}), ConfigError);
  CHECK_THROWS_AS(point_from_json(Json{"1", "2", "3"}, 6), ConfigError);
  CHECK(point_from_json(Json{"1/2", 3, "0"}, 3) == std::vector<Rational>{Rational(1, 2), 3, 0});
}
