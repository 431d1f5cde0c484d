#include "hmsl/io/json.hpp"

namespace hmsl {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ConfigError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

void expect_type(const Json& j, const std::string& type) {
  if (!j.is_object() || !j.contains("type") || j.at("type") != type)
    throw ConfigError("expected a scalar of type " + type);
}

Integer integer_from_json(const Json& j) {
  Rational r = rational_from_json(j);
  if (!r.is_integer()) throw ConfigError("expected an integer, got " + r.str());
  return r.numerator();
}

}  // namespace

std::string rational_text(const Rational& x) {
  return x.numerator().get_str() + "/" + x.denominator().get_str();
}

Rational rational_from_json(const Json& j) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_object() && j.value("type", "") == "rational") return rational_from_json(j.at("value"));
    if (j.is_object() && j.value("type", "") == "integer") return rational_from_json(j.at("value"));
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("expected a rational as \"n/d\", got " + j.dump());
}

Json to_json(const Rational& x) { return Json{{"type", "rational"}, {"value", rational_text(x)}}; }

Json to_json(const Integer& x) { return Json{{"type", "integer"}, {"value", x.get_str()}}; }

Json to_json(const Cyclo& x) {
  return Json{{"type", "cyclo"}, {"a", rational_text(x.a())}, {"b", rational_text(x.b())}};
}

Json to_json(const FqElt& x) {
  const Fq& f = x.field();
  return Json{{"type", "fq"},   {"p", f.p},     {"degree", f.degree},
              {"c0", x.c0()},    {"c1", x.c1()}, {"nonresidue", f.nonresidue}};
}

Json to_json(const PadicApprox& x) {
  Json j{{"type", "padic"}, {"p", x.prime()}, {"valuation", x.valuation_field()}, {"unit", x.unit().get_str()}};
  if (x.precision() >= PadicApprox::kExact)
    j["precision"] = nullptr;
  else
    j["precision"] = x.precision();
  return j;
}

Json to_json(const UnramifiedElt& x) {
  const auto& r = *x.ring();
  Json coords = Json::array(), modulus = Json::array();
  for (const auto& c : x.coords()) coords.push_back(c.get_str());
  for (const auto& c : r.modulus()) modulus.push_back(c.get_str());
  return Json{{"type", "unramified"}, {"p", r.prime()},        {"degree", r.degree()},
              {"precision", r.precision()}, {"modulus", modulus}, {"coords", coords}};
}

template <>
Rational scalar_from_json<Rational>(const Json& j) {
  return rational_from_json(j);
}

template <>
Integer scalar_from_json<Integer>(const Json& j) {
  return integer_from_json(j);
}

template <>
Cyclo scalar_from_json<Cyclo>(const Json& j) {
  if (!j.is_object()) return Cyclo(rational_from_json(j));
  if (j.value("type", "") == "rational") return Cyclo(rational_from_json(j));
  expect_type(j, "cyclo");
  return Cyclo(rational_from_json(field(j, "a")), rational_from_json(field(j, "b")));
}

template <>
FqElt scalar_from_json<FqElt>(const Json& j) {
  expect_type(j, "fq");
  try {
    const long p = field(j, "p").get<long>();
    const int degree = field(j, "degree").get<int>();
    Fq f = degree == 1 ? Fq::prime_field(p) : Fq::quadratic(p);
    if (j.contains("nonresidue") && j.at("nonresidue").get<long>() != f.nonresidue)
      throw ConfigError("F_q element written for a different presentation");
    return FqElt(f, field(j, "c0").get<long>(), field(j, "c1").get<long>());
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

template <>
PadicApprox scalar_from_json<PadicApprox>(const Json& j) {
  expect_type(j, "padic");
  const long p = field(j, "p").get<long>();
  const long v = field(j, "valuation").get<long>();
  const Json& prec = field(j, "precision");
  const long n = prec.is_null() ? PadicApprox::kExact : prec.get<long>();
  const Integer u(field(j, "unit").get<std::string>());
  if (u == 0) return PadicApprox::zero(p, n >= PadicApprox::kExact ? n : v + n);
  return PadicApprox(p, v, u, n);
}

template <>
UnramifiedElt scalar_from_json<UnramifiedElt>(const Json& j) {
  expect_type(j, "unramified");
  auto ring = UnramifiedRing::make(field(j, "p").get<long>(), field(j, "degree").get<int>(),
                                   field(j, "precision").get<long>());
  std::vector<Integer> modulus;
  for (const auto& c : field(j, "modulus")) modulus.emplace_back(c.get<std::string>());
  if (modulus != ring->modulus()) throw ConfigError("unramified element written for a different modulus");
  std::vector<Integer> coords;
  for (const auto& c : field(j, "coords")) coords.emplace_back(c.get<std::string>());
  return UnramifiedElt(ring, coords);
}

Json to_json(const Line<Rational>& l) { return Json{{"p", to_json(l.p())}, {"q", to_json(l.q())}}; }

std::vector<Rational> point_from_json(const Json& j, std::size_t dim) {
  if (!j.is_array() || j.size() != dim)
    throw ConfigError("a point needs " + std::to_string(dim) + " coordinates, got " + j.dump());
  std::vector<Rational> v;
  for (const Json& x : j) v.push_back(rational_from_json(x));
  return v;
}

Line<Rational> line_from_json(const Json& j) {
  std::vector<Rational> p, q;
  if (j.is_object()) {
    p = point_from_json(field(j, "p"));
    q = point_from_json(field(j, "q"));
  } else if (j.is_array() && j.size() == 2) {
    p = point_from_json(j[0]);
    q = point_from_json(j[1]);
  } else {
    throw ConfigError("a line is {\"p\": [...], \"q\": [...]} or a pair of points");
  }
  try {
    return Line<Rational>::through(p, q);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("bad line: ") + e.what());
  }
}

Json to_json(const LocalTarget& t) {
  Json place = t.is_real() ? Json("real") : Json(t.place);
  return Json{{"place", place}, {"line", to_json(t.line)}, {"precision", to_json(t.precision)}};
}

}  // namespace hmsl
