#include "hmsl/search/certificate.hpp"

#include <algorithm>

#include "hmsl/mpoly/dense_poly.hpp"
#include "hmsl/mpoly/galois.hpp"
#include "hmsl/mpoly/real_roots.hpp"

namespace hmsl {

namespace {

std::optional<long> rational_valuation(const Rational& x, long p) {
  if (x.is_zero()) return std::nullopt;
  const Integer pp(p);
  return valuation(x.numerator(), pp) - valuation(x.denominator(), pp);
}

// True when the form g(t, u) vanishes at some root of q over Q-bar: a point
// of L ∩ S sits exactly on {g = 0}, which no precision can rule out.
bool shares_root(const SparsePoly<Rational>& g, const BinaryQuartic<Rational>& q) {
  if (g.is_zero()) return true;
  const int deg = g.total_degree();
  std::vector<Rational> gc(static_cast<std::size_t>(deg) + 1);
  for (const auto& [e, c] : g.terms()) gc[e[0]] += c;
  if (q.c[4].is_zero() && gc[static_cast<std::size_t>(deg)].is_zero()) return true;
  DensePoly<Rational> a(std::vector<Rational>(q.c.begin(), q.c.end()), Rational(0));
  DensePoly<Rational> b(gc, Rational(0));
  return gcd(a, b).degree() >= 1;
}

Json optional_long(const std::optional<long>& v) { return v ? Json(*v) : Json(nullptr); }

Json int_vector(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

Valuation shifted(Valuation v, long s) {
  v.value += s;
  return v;
}

// v_p of scale * primitive(x) at a primitive local point.
Valuation scaled_valuation(const ScaledPoly& f, const std::vector<UnramifiedElt>& x, long p) {
  return shifted(f.primitive.evaluate(x).valuation(), *rational_valuation(f.scale, p));
}

PrimeReport prime_report(const SearchContext& ctx, const BinaryQuartic<Rational>& q,
                         const std::pair<std::vector<Integer>, std::vector<Integer>>& basis, long p,
                         long precision, std::vector<std::vector<UnramifiedElt>>* points_out) {
  PrimeReport r;
  r.p = p;
  r.local = hensel_factor_quartic(q, p, precision);
  if (!r.unramified()) return r;
  std::vector<std::vector<UnramifiedElt>> pts = local_points(basis.first, basis.second, r.local.roots);
  const auto& s = ctx.normalized_sigma();
  bool any_fail = false, all_pass = true;
  for (const auto& x : pts) {
    PointOrdinarity po;
    Valuation vd = scaled_valuation(s[0], x, p);
    po.ordinarity =
        ordinarity_from_valuations(scaled_valuation(s[3], x, p), scaled_valuation(s[5], x, p), vd, precision);
    if (vd.certified) po.curve_v_avoided = true;
    any_fail = any_fail || po.ordinarity.verdict == Verdict::Fail;
    all_pass = all_pass && po.ordinarity.verdict == Verdict::Pass;
    r.points.push_back(po);
  }
  r.ordinarity = any_fail ? Verdict::Fail : (all_pass ? Verdict::Pass : Verdict::Indeterminate);
  if (points_out) *points_out = std::move(pts);
  return r;
}

Json prime_json(const PrimeReport& r) {
  Json factors = Json::array(), blocks = Json::array(), points = Json::array();
  for (const auto& f : r.local.mod_p) factors.push_back(f.str());
  for (const auto& b : r.local.blocks) {
    blocks.push_back(Json{{"kind", to_string(b.kind)},
                          {"disc_valuation", b.disc_valuation ? Json(b.disc_valuation->str()) : Json(nullptr)},
                          {"verdict", to_string(b.verdict)},
                          {"residue_degree", b.residue_degree}});
  }
  for (const auto& pt : r.points) {
    const OrdinarityReport& o = pt.ordinarity;
    points.push_back(Json{{"v_sigma3", o.v_sigma3.str()},
                          {"v_sigma5", o.v_sigma5.str()},
                          {"v_d", o.v_d.str()},
                          {"v_u1", optional_long(o.v_u1)},
                          {"v_u2", optional_long(o.v_u2)},
                          {"ordinarity", to_string(o.verdict)},
                          {"curve_v_avoided", pt.curve_v_avoided ? Json(*pt.curve_v_avoided) : Json(nullptr)}});
  }
  return Json{{"p", r.p},
              {"mod_p_factors", factors},
              {"pattern", r.local.pattern()},
              {"squarefree_mod_p", r.local.squarefree_mod_p},
              {"verdict", to_string(r.local.verdict)},
              {"residue_degree", r.local.residue_degree},
              {"blocks", blocks},
              {"points", points},
              {"ordinarity", r.unramified() ? to_string(r.ordinarity) : "not-available"},
              {"curve_v", r.unramified() ? Json(r.curve_v_avoided()) : Json(nullptr)}};
}

Json cusp_json(const CuspReport& c, bool clear) {
  Json points = Json::array();
  for (const auto& pt : c.points) {
    Json d = Json::array(), co = Json::array(), dist = Json::array();
    for (const auto& x : pt.cusp) {
      d.push_back(x.depth);
      co.push_back(x.coincident);
      dist.push_back(x.str(c.p));
    }
    points.push_back(Json{{"depths", d}, {"coincident", co}, {"distances", dist}, {"proximate", pt.proximate}});
  }
  return Json{{"applicable", true}, {"p", c.p}, {"threshold", c.threshold}, {"points", points}, {"clear", clear}};
}

Json targets_json(const SearchContext& ctx, const std::optional<std::array<Rational, 3>>& abc) {
  Json out = Json::array();
  if (!abc) return out;
  ParameterLattice lat(ctx.parameter_targets());
  for (std::size_t i = 0; i < ctx.targets().size(); ++i) {
    const LocalTarget& t = ctx.targets()[i];
    const auto& target = ctx.target_parameters()[i];
    if (t.is_real()) {
      Rational d2 = lat.distance2(*abc);
      out.push_back(Json{{"place", "real"},
                         {"distance2", rational_text(d2)},
                         {"radius", rational_text(t.precision)},
                         {"holds", d2 <= t.precision * t.precision}});
      continue;
    }
    for (std::size_t k = 0; k < 3; ++k) {
      ParameterTargets one;
      one.congruences[k].push_back({t.place, ctx.depth(t.place), target[k]});
      out.push_back(Json{{"place", t.place},
                         {"depth", ctx.depth(t.place)},
                         {"coordinate", k},
                         {"target", rational_text(target[k])},
                         {"value", rational_text((*abc)[k])},
                         {"holds", ParameterLattice(one).satisfies(*abc)}});
    }
  }
  return out;
}

Json parity_json(const SearchContext& ctx, const std::optional<std::array<Rational, 3>>& abc) {
  if (!ctx.model().is_char3() || !abc) return nullptr;
  const auto& c = ctx.config();
  auto oa = rational_valuation((*abc)[0], 3), ob = rational_valuation((*abc)[1], 3),
       oc = rational_valuation((*abc)[2], 3);
  auto l1 = rational_valuation(c.lambda1, 3), l2 = rational_valuation(c.lambda2, 3);
  Json j{{"ord_a", optional_long(oa)},   {"ord_b", optional_long(ob)},     {"ord_c", optional_long(oc)},
         {"ord_lambda1", *l1},            {"ord_lambda2", *l2},             {"admissible", nullptr},
         {"separated", false}};
  if (ob && oc) j["admissible"] = discriminant_parity_admissible(*ob, *oc, *l1, *l2);
  if (oa && ob && oc && *oa >= 1 && *ob >= 1 && *oc >= 1 && ctx.char3_profile())
    j["separated"] = profile_valuations(*ctx.char3_profile(), *oa, *ob, *oc).separated();
  return j;
}

}  // namespace

bool PrimeReport::curve_v_avoided() const {
  return unramified() && std::all_of(points.begin(), points.end(), [](const PointOrdinarity& p) {
           return p.curve_v_avoided.value_or(false);
         });
}

const std::vector<std::string>& failure_names() {
  static const std::vector<std::string> names = {"degenerate-quartic", "non-squarefree", "real-roots",
                                                 "mod5-inconclusive",  "ordinarity-5",   "curve-v-5",
                                                 "mod3-inconclusive",  "cusp"};
  return names;
}

SolvableLineCertificate certify_line_at(const Line<Rational>& l, const SearchContext& ctx, long precision) {
  const SurfaceModel& m = ctx.model();
  if (l.dim() != 6 || !lies_in(l, m.q1) || !lies_in(l, m.q2))
    throw DomainError("the line does not lie on q1 = q2 = 0");
  SolvableLineCertificate cert;
  cert.line = l;
  cert.precision = precision;
  Json& doc = cert.document;
  doc["schema"] = kCertificateSchema;
  doc["model"] = Json{{"twist", ctx.config().twist},
                      {"lambda1", rational_text(ctx.config().lambda1)},
                      {"lambda2", rational_text(ctx.config().lambda2)}};
  doc["line"] = to_json(l);
  doc["precision"] = precision;
  auto abc = ctx.chart().coordinates(l);
  doc["chart"] = Json{{"name", ctx.chart().name()},
                      {"parameters", abc ? to_json(std::vector<Rational>(abc->begin(), abc->end())) : Json(nullptr)}};
  doc["targets"] = targets_json(ctx, abc);
  doc["parity"] = parity_json(ctx, abc);

  auto basis = saturated_basis(l);
  doc["basis"] = Json{{"p", int_vector(basis.first)}, {"q", int_vector(basis.second)}};
  LineQuartic<Rational> lq = integral_quartic_of_line(l, m);
  const BinaryQuartic<Rational>& q = lq.quartic;
  doc["quartic"] = to_json(std::vector<Rational>(q.c.begin(), q.c.end()));
  doc["degenerate"] = lq.degenerate;

  std::map<std::string, bool>& ck = cert.checks;
  for (const char* k : {"squarefree", "four_real_roots", "mod5_unramified", "ordinarity_5", "curve_v_5",
                        "mod3_unramified", "cusp_clear"})
    ck[k] = false;
  auto finish = [&]() -> SolvableLineCertificate& {
    cert.pass = cert.failures.empty();
    doc["checks"] = ck;
    doc["failures"] = cert.failures;
    doc["pass"] = cert.pass;
    return cert;
  };
  for (const char* k : {"discriminant", "discriminant_valuations", "galois", "real_root_count", "exact_vanishing",
                        "primes", "cusp"})
    doc[k] = nullptr;
  if (lq.degenerate) {
    cert.failures.push_back("degenerate-quartic");
    return finish();
  }
  const Rational disc = discriminant(q);
  doc["discriminant"] = to_json(disc);
  if (disc.is_zero()) {
    cert.failures.push_back("non-squarefree");
    return finish();
  }
  ck["squarefree"] = true;
  doc["discriminant_valuations"] =
      Json{{"3", optional_long(rational_valuation(disc, 3))}, {"5", optional_long(rational_valuation(disc, 5))}};
  cert.galois = quartic_galois_group(q);
  doc["galois"] = Json{{"label", cert.galois->name()},
                       {"order", cert.galois->order},
                       {"factor_degrees", cert.galois->factor_degrees},
                       {"solvable", cert.galois->solvable()}};
  cert.real_root_count = real_root_count(q);
  doc["real_root_count"] = cert.real_root_count;
  ck["four_real_roots"] = cert.real_root_count == 4;

  // Exact vanishing of sigma_3, sigma_5 or D at a point of L ∩ S leaves u1, u2
  // undefined there, so ordinarity fails whatever the precision.
  std::vector<Rational> bp(basis.first.begin(), basis.first.end()), bq(basis.second.begin(), basis.second.end());
  const bool meets_v = shares_root(restrict_to_points(m.curve_v, bp, bq), q);
  const bool meets_s3 = shares_root(restrict_to_points(m.sigma[3], bp, bq), q);
  const bool meets_s5 = shares_root(restrict_to_points(m.sigma[5], bp, bq), q);
  const bool exact_bad = meets_v || meets_s3 || meets_s5;
  doc["exact_vanishing"] = Json{{"d", meets_v}, {"sigma3", meets_s3}, {"sigma5", meets_s5}};

  std::vector<std::vector<UnramifiedElt>> points3;
  PrimeReport r5 = prime_report(ctx, q, basis, 5, precision, nullptr);
  if (r5.unramified() && r5.ordinarity == Verdict::Indeterminate && !exact_bad) {
    long needed = precision;
    for (const auto& pt : r5.points) needed = std::max(needed, pt.ordinarity.precision_needed);
    throw PrecisionError("ordinarity at 5 is indeterminate at precision " + std::to_string(precision),
                         std::max(needed, 2 * precision));
  }
  PrimeReport r3 = prime_report(ctx, q, basis, 3, precision, &points3);
  ck["mod5_unramified"] = r5.unramified();
  ck["ordinarity_5"] = r5.unramified() && r5.ordinarity == Verdict::Pass && !exact_bad;
  ck["curve_v_5"] = r5.curve_v_avoided() && !meets_v;
  ck["mod3_unramified"] = r3.unramified();
  doc["primes"] = Json{{"3", prime_json(r3)}, {"5", prime_json(r5)}};

  if (m.is_char3()) {
    if (r3.unramified()) {
      cert.cusp = cusp_proximity(points3, ctx.config().cusp_threshold);
      const bool clear =
          !cert.cusp->any_coincident() && (ctx.config().cusp_threshold == 0 || !cert.cusp->any_proximate());
      ck["cusp_clear"] = clear;
      doc["cusp"] = cusp_json(*cert.cusp, clear);
    } else {
      doc["cusp"] = Json{{"applicable", true}, {"p", 3}, {"threshold", ctx.config().cusp_threshold},
                         {"points", nullptr}, {"clear", false}};
    }
  } else {
    ck["cusp_clear"] = true;
    doc["cusp"] = Json{{"applicable", false}, {"clear", true}};
  }
  cert.primes.emplace(3, std::move(r3));
  cert.primes.emplace(5, std::move(r5));

  if (!ck["four_real_roots"]) cert.failures.push_back("real-roots");
  if (!ck["mod5_unramified"]) cert.failures.push_back("mod5-inconclusive");
  if (ck["mod5_unramified"] && !ck["ordinarity_5"]) cert.failures.push_back("ordinarity-5");
  if (ck["mod5_unramified"] && !ck["curve_v_5"]) cert.failures.push_back("curve-v-5");
  if (!ck["mod3_unramified"]) cert.failures.push_back("mod3-inconclusive");
  if (!ck["cusp_clear"]) cert.failures.push_back("cusp");
  return finish();
}

SolvableLineCertificate certify_line(const Line<Rational>& l, const SearchContext& ctx) {
  const long cap = ctx.config().precision_cap();
  long n = ctx.config().precision;
  for (;;) {
    try {
      return certify_line_at(l, ctx, n);
    } catch (const PrecisionError& e) {
      if (n >= cap)
        throw PrecisionError(std::string(e.what()) + "; precision cap " + std::to_string(cap) + " exhausted",
                             e.needed());
      n = std::min(cap, std::max(2 * n, e.needed()));
    }
  }
}

}  // namespace hmsl
