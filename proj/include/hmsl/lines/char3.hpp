#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hmsl/exact/rational.hpp"
#include "hmsl/exact/unramified.hpp"
#include "hmsl/lines/line.hpp"
#include "hmsl/lines/quadric.hpp"
#include "hmsl/surface/model.hpp"

namespace hmsl {

// Spanning points of L_{a,b,c} at (x1, x2) = (1, 0) and (0, 1):
//   P = (-b^2, 1, 0, -a - bc, -b, b),  Q = (a - bc, 0, 1, -c^2, -c, c).
template <class R>
std::pair<std::vector<R>, std::vector<R>> labc_points(const R& a, const R& b, const R& c,
                                                      const R& zero, const R& one) {
  return {{-(b * b), one, zero, -a - b * c, -b, b}, {a - b * c, zero, one, -(c * c), -c, c}};
}

template <class R>
std::pair<std::vector<R>, std::vector<R>> labc_points(const R& a, const R& b, const R& c) {
  return labc_points(a, b, c, zero_like(a), one_like(a));
}

void require_char3(const SurfaceModel& model);

template <class R>
Line<R> labc_line(const R& a, const R& b, const R& c, const SurfaceModel& model) {
  require_char3(model);
  auto [p, q] = labc_points(a, b, c);
  return Line<R>::through(p, q);
}

// The L_{a,b,c} family as a chart on lines of the char-3 model.
class LabcChart : public LineChart {
 public:
  explicit LabcChart(const SurfaceModel& model);
  std::string name() const override { return "labc"; }
  Line<Rational> line(const std::array<Rational, 3>& abc) const override;
  std::optional<std::array<Rational, 3>> coordinates(const Line<Rational>& l) const override;

 private:
  const SurfaceModel* model_;
};

// P_0..P_4 in (a, b, c) with Q4 restricted to L_{a,b,c} equal to
// sum P_i x1^i x2^(4-i), where Q4 = 27 * sigma_4 in x-coordinates.
struct Char3Profile {
  Rational lambda1, lambda2;
  std::array<RPoly, 5> P;
};

Char3Profile char3_leading_profile(const Rational& lambda1, const Rational& lambda2);

struct ProfileValuations {
  long alpha = 0, beta = 0, gamma = 0;
  std::array<long, 5> actual{};    // v_3(P_i(3^alpha, 3^beta, 3^gamma))
  std::array<long, 5> expected{};  // valuation of the displayed leading term
  // The leading monomial has strictly smaller valuation than every other term.
  std::array<bool, 5> dominant{};
  bool separated() const;
};

// Valuations at a = 3^alpha, b = 3^beta, c = 3^gamma without regime checks.
ProfileValuations profile_valuations(const Char3Profile& prof, long alpha, long beta, long gamma);

// As above, but requires every leading term to dominate; otherwise throws
// DomainError naming the smallest common shift of beta and gamma that
// separates the terms.
ProfileValuations check_leading_profile(const Char3Profile& prof, long alpha, long beta, long gamma);

// ord b = ord lambda1 and ord c = ord lambda2 mod 2.
bool parity_admissible(long ord_b, long ord_c, long ord_lambda1, long ord_lambda2);

// Parity condition under which the quadratic blocks of the L_{a,b,c}
// quartic have even discriminant valuation over Q_3: the factor 3 in
// P_2 = -3a^2 shifts both conditions by one.
bool discriminant_parity_admissible(long ord_b, long ord_c, long ord_lambda1, long ord_lambda2);

// 3-adic distance of points (x-coordinates) to the cusps [0:1:0:0:0:0] and
// [0:0:1:0:0:0]. depth k means distance p^-k; coincident means the point
// agrees with the cusp to the working precision (distance 0 there).
struct CuspDistance {
  long depth = 0;
  bool coincident = false;
  std::string str(long p) const;
};

struct PointCuspReport {
  std::array<CuspDistance, 2> cusp;
  bool proximate = false;
};

struct CuspReport {
  long p = 3;
  long threshold = 0;
  std::vector<PointCuspReport> points;
  bool any_proximate() const;
  bool any_coincident() const;
};

CuspReport cusp_proximity(const std::vector<std::vector<UnramifiedElt>>& points, long threshold);

}  // namespace hmsl
