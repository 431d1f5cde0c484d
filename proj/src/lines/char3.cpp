#include "hmsl/lines/char3.hpp"

#include <algorithm>
#include <limits>

#include "hmsl/surface/twist.hpp"

namespace hmsl {

void require_char3(const SurfaceModel& model) {
  if (!model.is_char3()) throw DomainError("L_{a,b,c} lines live in the char-3 x-coordinate model");
}

LabcChart::LabcChart(const SurfaceModel& model) : model_(&model) { require_char3(model); }

Line<Rational> LabcChart::line(const std::array<Rational, 3>& abc) const {
  return labc_line(abc[0], abc[1], abc[2], *model_);
}

std::optional<std::array<Rational, 3>> LabcChart::coordinates(const Line<Rational>& l) const {
  // Points with (x1, x2) = (1, 0) and (0, 1).
  const auto& p = l.p();
  const auto& q = l.q();
  Rational det = p[1] * q[2] - q[1] * p[2];
  if (det.is_zero()) return std::nullopt;
  std::vector<Rational> u, v;
  for (std::size_t i = 0; i < 6; ++i) {
    u.push_back((q[2] * p[i] - p[2] * q[i]) / det);
    v.push_back((p[1] * q[i] - q[1] * p[i]) / det);
  }
  Rational b = -u[4], c = -v[4];
  Rational a = -u[3] - b * c;
  std::array<Rational, 3> abc{a, b, c};
  if (!(line(abc) == l)) return std::nullopt;
  return abc;
}

Char3Profile char3_leading_profile(const Rational& lambda1, const Rational& lambda2) {
  SurfaceModel model = twisted_equations(char3_twist(lambda1, lambda2));
  RPoly q4 = model.sigma[4].scaled(Rational(27));
  // Variables a, b, c, x1, x2.
  auto var = [](std::size_t i) { return RPoly::variable(5, i, Rational(1)); };
  RPoly a = var(0), b = var(1), c = var(2), x1 = var(3), x2 = var(4);
  auto [p, q] = labc_points(a, b, c, RPoly(5), RPoly::constant(5, Rational(1)));
  std::vector<RPoly> forms;
  for (std::size_t i = 0; i < 6; ++i) forms.push_back(p[i] * x1 + q[i] * x2);
  RPoly r = q4.substitute(forms, Rational(1));
  Char3Profile prof{lambda1, lambda2, {}};
  for (auto& pi : prof.P) pi = RPoly(3);
  for (const auto& [e, coef] : r.terms()) {
    if (e[3] + e[4] != 4) throw DomainError("restriction of Q4 is not a quartic form");
    prof.P[static_cast<std::size_t>(e[3])].add_term({e[0], e[1], e[2]}, coef);
  }
  return prof;
}

ProfileValuations profile_valuations(const Char3Profile& prof, long alpha, long beta, long gamma) {
  ProfileValuations out;
  out.alpha = alpha;
  out.beta = beta;
  out.gamma = gamma;
  std::vector<Rational> pt{pow(Rational(3), alpha), pow(Rational(3), beta), pow(Rational(3), gamma)};
  for (std::size_t i = 0; i < 5; ++i) {
    Rational v = prof.P[i].evaluate(pt);
    if (v.is_zero()) throw DomainError("P_" + std::to_string(i) + " vanishes at the regime point");
    out.actual[i] = valuation(v, 3);
  }
  const long l1 = valuation(prof.lambda1, 3), l2 = valuation(prof.lambda2, 3);
  out.expected = {gamma + 3 * l2, beta + 3 * l2, 1 + 2 * alpha, gamma - 3 * l1, beta - 3 * l1};
  const std::array<Exponent, 5> leading{Exponent{0, 0, 1}, Exponent{0, 1, 0}, Exponent{2, 0, 0},
                                        Exponent{0, 0, 1}, Exponent{0, 1, 0}};
  for (std::size_t i = 0; i < 5; ++i) {
    std::optional<long> lead;
    long others = std::numeric_limits<long>::max();
    for (const auto& [e, coef] : prof.P[i].terms()) {
      long v = valuation(coef, 3) + e[0] * alpha + e[1] * beta + e[2] * gamma;
      if (e == leading[i])
        lead = v;
      else
        others = std::min(others, v);
    }
    out.dominant[i] = lead && *lead < others;
  }
  return out;
}

bool ProfileValuations::separated() const {
  return actual == expected && std::all_of(dominant.begin(), dominant.end(), [](bool b) { return b; });
}

ProfileValuations check_leading_profile(const Char3Profile& prof, long alpha, long beta, long gamma) {
  if (alpha < 1 || beta < 1 || gamma < 1) throw DomainError("regime needs positive alpha, beta, gamma");
  ProfileValuations r = profile_valuations(prof, alpha, beta, gamma);
  if (r.separated()) return r;
  for (long shift = 1; shift <= 64 * (alpha + beta + gamma + 8); ++shift) {
    if (profile_valuations(prof, alpha, beta + shift, gamma + shift).separated()) {
      throw DomainError("regime parameters too small to separate terms at (alpha, beta, gamma) = (" +
                        std::to_string(alpha) + ", " + std::to_string(beta) + ", " +
                        std::to_string(gamma) + "); need beta, gamma raised by " +
                        std::to_string(shift) + " to (" + std::to_string(alpha) + ", " +
                        std::to_string(beta + shift) + ", " + std::to_string(gamma + shift) + ")");
    }
  }
  throw DomainError("regime parameters too small to separate terms; no separating shift found");
}

namespace {
bool same_parity(long x, long y) { return ((x - y) % 2 + 2) % 2 == 0; }
}  // namespace

bool parity_admissible(long ord_b, long ord_c, long ord_lambda1, long ord_lambda2) {
  return same_parity(ord_b, ord_lambda1) && same_parity(ord_c, ord_lambda2);
}

bool discriminant_parity_admissible(long ord_b, long ord_c, long ord_lambda1, long ord_lambda2) {
  return parity_admissible(ord_b + 1, ord_c + 1, ord_lambda1, ord_lambda2);
}

std::string CuspDistance::str(long p) const {
  if (coincident) return "0 (agrees to precision " + std::to_string(depth) + ")";
  if (depth == 0) return "1";
  return std::to_string(p) + "^-" + std::to_string(depth);
}

bool CuspReport::any_proximate() const {
  return std::any_of(points.begin(), points.end(), [](const PointCuspReport& r) { return r.proximate; });
}

bool CuspReport::any_coincident() const {
  return std::any_of(points.begin(), points.end(), [](const PointCuspReport& r) {
    return r.cusp[0].coincident || r.cusp[1].coincident;
  });
}

CuspReport cusp_proximity(const std::vector<std::vector<UnramifiedElt>>& points, long threshold) {
  CuspReport rep;
  rep.threshold = threshold;
  for (const auto& x : points) {
    if (x.size() != 6) throw DomainError("points of P^5 have six coordinates");
    rep.p = x.front().ring()->prime();
    const long n = x.front().ring()->precision();
    long vmin = n;
    for (const auto& c : x) {
      Valuation v = c.valuation();
      if (v.certified) vmin = std::min(vmin, v.value);
    }
    if (vmin >= n) throw PrecisionError("point vanishes to the working precision", 2 * n);
    const long avail = n - vmin;  // precision left after making x primitive
    PointCuspReport pr;
    for (std::size_t k = 0; k < 2; ++k) {
      const std::size_t idx = k + 1;
      CuspDistance& d = pr.cusp[k];
      Valuation vi = x[idx].valuation();
      if (!vi.certified || vi.value != vmin) {
        d.depth = 0;
        continue;
      }
      long depth = avail;
      for (std::size_t j = 0; j < 6; ++j) {
        if (j == idx) continue;
        Valuation vj = x[j].valuation();
        if (vj.certified) depth = std::min(depth, vj.value - vmin);
      }
      d.depth = depth;
      d.coincident = depth >= avail;
    }
    pr.proximate = std::any_of(pr.cusp.begin(), pr.cusp.end(),
                               [&](const CuspDistance& d) { return d.coincident || d.depth >= threshold; });
    rep.points.push_back(pr);
  }
  return rep;
}

}  // namespace hmsl
