#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "hmsl/errors.hpp"
#include "hmsl/exact/cyclo.hpp"
#include "hmsl/exact/finite_field.hpp"
#include "hmsl/exact/padic.hpp"
#include "hmsl/exact/rational.hpp"
#include "hmsl/exact/unramified.hpp"
#include "hmsl/lines/line.hpp"
#include "hmsl/lines/target.hpp"
#include "hmsl/mpoly/sparse_poly.hpp"

namespace hmsl {

// nlohmann::json keeps object keys sorted, which is the canonical key order
// of every document written here.
using Json = nlohmann::json;

// Rationals are always written "num/den", so integers read "n/1".
std::string rational_text(const Rational& x);

// Accepts a string ("n", "n/d"), a JSON integer, or a scalar object of
// type "rational". Throws ConfigError otherwise.
Rational rational_from_json(const Json& j);

// Scalars as {"type": ..., fields}.
Json to_json(const Rational& x);
Json to_json(const Integer& x);
Json to_json(const Cyclo& x);
Json to_json(const FqElt& x);
Json to_json(const PadicApprox& x);
Json to_json(const UnramifiedElt& x);

template <class S>
S scalar_from_json(const Json& j);
template <> Rational scalar_from_json<Rational>(const Json& j);
template <> Integer scalar_from_json<Integer>(const Json& j);
template <> Cyclo scalar_from_json<Cyclo>(const Json& j);
template <> FqElt scalar_from_json<FqElt>(const Json& j);
template <> PadicApprox scalar_from_json<PadicApprox>(const Json& j);
template <> UnramifiedElt scalar_from_json<UnramifiedElt>(const Json& j);

template <class S>
Json to_json(const std::vector<S>& v) {
  Json out = Json::array();
  for (const S& x : v) out.push_back(to_json(x));
  return out;
}

// [{"exp": [...], "coeff": scalar}, ...] in graded-lex descending order.
template <class R>
Json to_json(const SparsePoly<R>& f) {
  Json out = Json::array();
  for (const auto& [e, c] : f.terms()) out.push_back(Json{{"exp", e}, {"coeff", to_json(c)}});
  return out;
}

template <class R>
SparsePoly<R> poly_from_json(const Json& j, std::size_t nvars) {
  if (!j.is_array()) throw ConfigError("a polynomial is a list of terms");
  SparsePoly<R> f(nvars);
  for (const Json& t : j) {
    if (!t.is_object() || !t.contains("exp") || !t.contains("coeff"))
      throw ConfigError("a term needs \"exp\" and \"coeff\"");
    Exponent e = t.at("exp").get<Exponent>();
    if (e.size() != nvars) throw ConfigError("exponent has the wrong length");
    f.add_term(e, scalar_from_json<R>(t.at("coeff")));
  }
  return f;
}

// {"p": [...], "q": [...]}: the two canonical basis points.
Json to_json(const Line<Rational>& l);

// Reads two spanning points (canonical or not) and rebuilds the canonical
// form. Throws ConfigError for malformed or proportional points.
Line<Rational> line_from_json(const Json& j);

std::vector<Rational> point_from_json(const Json& j, std::size_t dim = 6);

// {"place": "real" | p, "line": ..., "precision": ...}.
Json to_json(const LocalTarget& t);

}  // namespace hmsl
