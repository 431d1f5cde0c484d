#include "hmsl/search/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "hmsl/lines/char3.hpp"
#include "hmsl/surface/twist.hpp"

namespace hmsl {

namespace {

const std::set<std::string> kKeys = {"twist",         "lambda1",        "lambda2",   "seed_point",
                                     "targets",       "k3",             "k5",        "height_bound",
                                     "precision",     "rng_seed",       "max_precision", "cusp_threshold",
                                     "max_candidates", "threads"};

long integer_field(const Json& j, const char* key, long min) {
  const Json& v = j.at(key);
  if (!v.is_number_integer()) throw ConfigError(std::string(key) + " must be an integer");
  long x = v.get<long>();
  if (x < min) throw ConfigError(std::string(key) + " must be >= " + std::to_string(min));
  return x;
}

long parse_place(const Json& p) {
  if (p.is_string()) {
    std::string s = p.get<std::string>();
    if (s == "real" || s == "infinity") return 0;
    if (s == "3") return 3;
    if (s == "5") return 5;
  } else if (p.is_number_integer()) {
    long v = p.get<long>();
    if (v == 3 || v == 5) return v;
  }
  throw ConfigError("target place must be \"real\", 3 or 5, got " + p.dump());
}

TargetSpec parse_target(const Json& j) {
  if (!j.is_object()) throw ConfigError("a target is an object");
  for (const auto& [k, v] : j.items()) {
    (void)v;
    if (k != "place" && k != "line" && k != "params" && k != "precision")
      throw ConfigError("unknown target key \"" + k + "\"");
  }
  if (!j.contains("place")) throw ConfigError("a target needs a place");
  TargetSpec t;
  t.place = parse_place(j.at("place"));
  if (j.contains("line") == j.contains("params"))
    throw ConfigError("a target needs exactly one of \"line\" and \"params\"");
  if (j.contains("line")) t.line = line_from_json(j.at("line"));
  if (j.contains("params")) {
    std::vector<Rational> v = point_from_json(j.at("params"), 3);
    t.params = std::array<Rational, 3>{v[0], v[1], v[2]};
  }
  if (j.contains("precision")) {
    Rational r = rational_from_json(j.at("precision"));
    if (r.sign() <= 0) throw ConfigError("target precision must be positive");
    t.radius = r;
  }
  return t;
}

Matrix<Cyclo> parse_matrix(const Json& j) {
  if (!j.is_array() || j.size() != 6) throw ConfigError("a twist matrix has six rows");
  std::vector<std::vector<Cyclo>> rows;
  for (const Json& r : j) {
    if (!r.is_array() || r.size() != 6) throw ConfigError("a twist matrix row has six entries");
    std::vector<Cyclo> row;
    for (const Json& x : r) row.push_back(scalar_from_json<Cyclo>(x));
    rows.push_back(std::move(row));
  }
  return Matrix<Cyclo>(rows);
}

template <class F>
auto as_config_error(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ConfigError&) {
    throw;
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace

SearchConfig parse_config(const Json& j) {
  if (!j.is_object()) throw ConfigError("the config must be a JSON object");
  for (const auto& [k, v] : j.items()) {
    (void)v;
    if (!kKeys.count(k)) throw ConfigError("unknown config key \"" + k + "\"");
  }
  SearchConfig c;
  try {
    if (j.contains("twist")) {
      const Json& t = j.at("twist");
      if (t.is_string()) {
        c.twist = t.get<std::string>();
      } else if (t.is_object() && t.contains("matrix")) {
        c.twist = t.value("label", std::string("custom"));
        c.twist_matrix = parse_matrix(t.at("matrix"));
      } else {
        throw ConfigError("twist must be a name or {\"label\", \"matrix\"}");
      }
    }
    if (j.contains("lambda1")) c.lambda1 = rational_from_json(j.at("lambda1"));
    if (j.contains("lambda2")) c.lambda2 = rational_from_json(j.at("lambda2"));
    if (c.lambda1.is_zero() || c.lambda2.is_zero()) throw ConfigError("lambda1 and lambda2 must be nonzero");
    if (j.contains("seed_point") && !j.at("seed_point").is_null())
      c.seed_point = point_from_json(j.at("seed_point"));
    if (j.contains("targets")) {
      if (!j.at("targets").is_array()) throw ConfigError("targets must be a list");
      std::set<long> places;
      for (const Json& t : j.at("targets")) {
        c.targets.push_back(parse_target(t));
        if (!places.insert(c.targets.back().place).second)
          throw ConfigError("two targets at the same place");
      }
    }
    if (j.contains("k3")) c.k3 = integer_field(j, "k3", 1);
    if (j.contains("k5")) c.k5 = integer_field(j, "k5", 1);
    if (j.contains("height_bound")) c.height_bound = integer_field(j, "height_bound", 1);
    if (j.contains("precision")) c.precision = integer_field(j, "precision", 2);
    if (j.contains("rng_seed")) c.rng_seed = static_cast<std::uint64_t>(integer_field(j, "rng_seed", 0));
    if (j.contains("max_precision")) c.max_precision = integer_field(j, "max_precision", 2);
    if (j.contains("cusp_threshold")) c.cusp_threshold = integer_field(j, "cusp_threshold", 0);
    if (j.contains("max_candidates")) c.max_candidates = integer_field(j, "max_candidates", 1);
    if (j.contains("threads")) c.threads = static_cast<unsigned>(integer_field(j, "threads", 0));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  if (c.precision_cap() < c.precision)
    throw ConfigError("max_precision " + std::to_string(c.max_precision) + " is below precision " +
                      std::to_string(c.precision));
  for (const auto& t : c.targets)
    if (t.place != 0 && t.radius) {
      const long k = t.place == 3 ? c.k3 : c.k5;
      if (*t.radius != Rational(k))
        throw ConfigError("p-adic target precision must equal k" + std::to_string(t.place));
    }
  return c;
}

SearchConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config " + path + " is not valid JSON: " + e.what());
  }
  return parse_config(j);
}

Json to_json(const SearchConfig& c) {
  Json j;
  if (c.twist_matrix) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < 6; ++r) {
      Json row = Json::array();
      for (std::size_t k = 0; k < 6; ++k) row.push_back(to_json((*c.twist_matrix)(r, k)));
      rows.push_back(row);
    }
    j["twist"] = Json{{"label", c.twist}, {"matrix", rows}};
  } else {
    j["twist"] = c.twist;
  }
  j["lambda1"] = rational_text(c.lambda1);
  j["lambda2"] = rational_text(c.lambda2);
  if (c.seed_point) {
    Json s = Json::array();
    for (const auto& x : *c.seed_point) s.push_back(rational_text(x));
    j["seed_point"] = s;
  } else {
    j["seed_point"] = nullptr;
  }
  Json ts = Json::array();
  for (const auto& t : c.targets) {
    Json o;
    o["place"] = t.place == 0 ? Json("real") : Json(t.place);
    if (t.line) o["line"] = to_json(*t.line);
    if (t.params) o["params"] = {rational_text((*t.params)[0]), rational_text((*t.params)[1]),
                                 rational_text((*t.params)[2])};
    if (t.radius) o["precision"] = rational_text(*t.radius);
    ts.push_back(o);
  }
  j["targets"] = ts;
  j["k3"] = c.k3;
  j["k5"] = c.k5;
  j["height_bound"] = c.height_bound;
  j["precision"] = c.precision;
  j["rng_seed"] = c.rng_seed;
  j["max_precision"] = c.precision_cap();
  j["cusp_threshold"] = c.cusp_threshold;
  j["max_candidates"] = c.max_candidates;
  return j;
}

std::vector<Rational> reference_real_point() {
  return {Rational(7, 15), -1, Rational(4, 5), 0, -2, Rational(-8, 15)};
}

std::vector<Rational> reference_real_direction() { return {Rational(4, 3), 0, -1, 1, 0, Rational(-2, 3)}; }

Line<Rational> reference_real_line() {
  std::vector<Rational> p = reference_real_point(), d = reference_real_direction(), q(6);
  for (std::size_t i = 0; i < 6; ++i) q[i] = p[i] + d[i];
  return line_through(p, q);
}

SearchContext::SearchContext(SearchConfig config) : config_(std::move(config)) {
  const SearchConfig& c = config_;
  TwistData tw = as_config_error([&] {
    if (!c.twist_matrix) return builtin_twist(c.twist, c.lambda1, c.lambda2);
    TwistData t;
    t.label = c.twist;
    t.matrix = *c.twist_matrix;
    t.lambda1 = c.lambda1;
    t.lambda2 = c.lambda2;
    return t;
  });
  model_ = std::make_shared<const SurfaceModel>(as_config_error([&] { return twisted_equations(tw); }));
  const SurfaceModel& m = *model_;

  if (m.is_char3()) {
    chart_ = std::make_shared<LabcChart>(m);
  } else {
    std::vector<Rational> seed = c.seed_point ? *c.seed_point : reference_real_point();
    if (!m.q1.evaluate(seed).is_zero() || !m.q2.evaluate(seed).is_zero())
      throw ConfigError("seed point is not on q1 = q2 = 0 of the " + c.twist + " model");
    std::optional<Line<Rational>> preferred;
    for (const auto& t : c.targets)
      if (t.place == 0 && t.line && t.line->contains(seed)) preferred = *t.line;
    chart_ = as_config_error([&] { return std::make_shared<HyperbolicChart>(m, seed, preferred); });
  }

  for (const auto& t : c.targets) {
    Line<Rational> line = t.line ? *t.line : as_config_error([&] { return chart_->line(*t.params); });
    Rational prec = t.place == 0 ? t.radius.value_or(Rational(1)) : Rational(depth(t.place));
    targets_.push_back(as_config_error([&] { return make_local_target(m, t.place, line, prec); }));
    auto abc = chart_->coordinates(line);
    if (!abc) throw ConfigError("target line at " + targets_.back().place_name() + " lies outside the " +
                                chart_->name() + " chart");
    target_params_.push_back(*abc);
    if (t.place == 0) {
      param_targets_.real = *abc;
      param_targets_.radius = prec;
    } else {
      param_targets_.add_padic(t.place, depth(t.place), *abc);
    }
  }
  as_config_error([&] {
    ParameterLattice check(param_targets_);
    return 0;
  });

  sigma_[0] = normalize_integral(m.curve_v);
  for (std::size_t k = 1; k <= 6; ++k) sigma_[k] = normalize_integral(m.sigma[k]);
  if (m.is_char3()) profile_ = char3_leading_profile(c.lambda1, c.lambda2);
}

long SearchContext::depth(long p) const {
  if (p == 3) return config_.k3;
  if (p == 5) return config_.k5;
  throw DomainError("congruence depths exist for 3 and 5 only");
}

}  // namespace hmsl
