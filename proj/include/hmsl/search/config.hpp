#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hmsl/exact/cyclo.hpp"
#include "hmsl/exact/matrix.hpp"
#include "hmsl/io/json.hpp"
#include "hmsl/lines/char3.hpp"
#include "hmsl/lines/quadric.hpp"
#include "hmsl/lines/target.hpp"
#include "hmsl/search/crt.hpp"
#include "hmsl/surface/model.hpp"

namespace hmsl {

// A local target as written in a config: a line, or chart parameters.
// For p-adic places the congruence depth comes from k3/k5; `radius` is the
// real separation bound (Euclidean on the chart) and is ignored elsewhere.
struct TargetSpec {
  long place = 0;  // 0 = real
  std::optional<Line<Rational>> line;
  std::optional<std::array<Rational, 3>> params;
  std::optional<Rational> radius;
};

struct SearchConfig {
  std::string twist = "rho0-archimedean";
  std::optional<Matrix<Cyclo>> twist_matrix;  // custom twist, labelled `twist`
  Rational lambda1{1};
  Rational lambda2{1};
  std::optional<std::vector<Rational>> seed_point;
  std::vector<TargetSpec> targets;
  long k3 = 1;
  long k5 = 1;
  long height_bound = 1000;
  long precision = 12;
  std::uint64_t rng_seed = 0;
  // Optional keys.
  long max_precision = 0;  // 0 means 4 * precision
  long cusp_threshold = 0;  // 0 rejects only cusp coincidence
  long max_candidates = 200000;
  unsigned threads = 0;  // 0 means hardware concurrency

  long precision_cap() const { return max_precision > 0 ? max_precision : 4 * precision; }
};

// Throws ConfigError for unknown keys, wrong types and violated invariants
// that can be checked without building the model.
SearchConfig parse_config(const Json& j);
SearchConfig load_config(const std::string& path);
Json to_json(const SearchConfig& c);

// The t = 0 point of the real reference line of the archimedean twist, and
// its direction; the default seed point.
std::vector<Rational> reference_real_point();
std::vector<Rational> reference_real_direction();
Line<Rational> reference_real_line();

// Everything derived from a config: the model, the chart, resolved targets
// and the congruence data. Construction throws ConfigError when the seed or
// a target is off the quadrics, or a target lies outside the chart.
class SearchContext {
 public:
  explicit SearchContext(SearchConfig config);

  const SearchConfig& config() const { return config_; }
  const SurfaceModel& model() const { return *model_; }
  const LineChart& chart() const { return *chart_; }
  const std::vector<LocalTarget>& targets() const { return targets_; }
  // Chart coordinates of targets()[i].
  const std::vector<std::array<Rational, 3>>& target_parameters() const { return target_params_; }
  const ParameterTargets& parameter_targets() const { return param_targets_; }
  long depth(long p) const;

  // sigma_k = scale_k * primitive_k for k = 1..6, and D likewise at index 0.
  const std::array<ScaledPoly, 7>& normalized_sigma() const { return sigma_; }

  // Symbolic leading profile of the L_{a,b,c} quartic (char-3 model only).
  const std::optional<Char3Profile>& char3_profile() const { return profile_; }

 private:
  SearchConfig config_;
  std::shared_ptr<const SurfaceModel> model_;  // stable address for the chart
  std::shared_ptr<const LineChart> chart_;
  std::vector<LocalTarget> targets_;
  std::vector<std::array<Rational, 3>> target_params_;
  ParameterTargets param_targets_;
  std::array<ScaledPoly, 7> sigma_;
  std::optional<Char3Profile> profile_;
};

}  // namespace hmsl
