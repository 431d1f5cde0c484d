#include "hmsl/surface/profile.hpp"

#include <limits>

namespace hmsl {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "?";
}

namespace {

constexpr long kInf = std::numeric_limits<long>::max() / 8;

struct Interval {
  long lo, hi;
};

Interval of(const Valuation& v) { return v.certified ? Interval{v.value, v.value} : Interval{v.value, kInf}; }

long mul(long k, long x) {
  if (x >= kInf) return k > 0 ? kInf : -kInf;
  if (x <= -kInf) return k > 0 ? -kInf : kInf;
  return k * x;
}

long add(long a, long b) {
  if (a >= kInf || b >= kInf) return kInf;
  if (a <= -kInf || b <= -kInf) return -kInf;
  return a + b;
}

}  // namespace

OrdinarityReport ordinarity_from_valuations(const Valuation& v3, const Valuation& v5,
                                            const Valuation& vd, long precision) {
  OrdinarityReport r;
  r.v_sigma3 = v3;
  r.v_sigma5 = v5;
  r.v_d = vd;
  Interval s3 = of(v3), s5 = of(v5), d = of(vd);
  // u1: 5 vD - 6 v5, u2: 3 vD - 3 v5 - v3.
  Interval u1{add(mul(5, d.lo), mul(-6, s5.hi)), add(mul(5, d.hi), mul(-6, s5.lo))};
  Interval u2{add(add(mul(3, d.lo), mul(-3, s5.hi)), -s3.hi),
              add(add(mul(3, d.hi), mul(-3, s5.lo)), s3.lo >= kInf ? -kInf : -s3.lo)};
  const bool all_certified = v3.certified && v5.certified && vd.certified;
  if (all_certified) {
    r.v_u1 = u1.lo;
    r.v_u2 = u2.lo;
    r.verdict = (u1.lo <= 0 && u2.lo <= 0) ? Verdict::Pass : Verdict::Fail;
    return r;
  }
  if (u1.lo > 0 || u2.lo > 0) {
    r.verdict = Verdict::Fail;
    if (v5.certified && vd.certified) r.v_u1 = u1.lo;
    return r;
  }
  r.verdict = Verdict::Indeterminate;
  r.precision_needed = std::max(2 * precision, precision + 1);
  return r;
}

}  // namespace hmsl
