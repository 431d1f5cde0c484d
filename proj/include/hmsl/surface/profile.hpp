#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hmsl/errors.hpp"
#include "hmsl/exact/padic.hpp"
#include "hmsl/exact/scalar.hpp"
#include "hmsl/mpoly/symmetric.hpp"
#include "hmsl/surface/model.hpp"

namespace hmsl {

// sigma_1..sigma_6 at one affine representative of a point, plus
// D = sigma_3^2 - 4 sigma_6.
template <class S>
struct SigmaProfile {
  std::array<S, 6> values;
  S d;
  const S& sigma(int k) const { return values.at(static_cast<std::size_t>(k - 1)); }
};

template <class S>
void require_nonzero_point(const std::vector<S>& pt) {
  if (pt.size() != 6) throw DomainError("points of P^5 have six coordinates");
  for (const S& x : pt)
    if (!is_zero(x)) return;
  throw DomainError("the zero vector is not a projective point");
}

template <class S>
SigmaProfile<S> make_profile(std::array<S, 6> v) {
  S d = v[2] * v[2] - embed(Rational(4), v[0]) * v[5];
  return {std::move(v), std::move(d)};
}

// Profile of a point given in the standard coordinates s_0..s_5.
template <class S>
SigmaProfile<S> sigma_profile(const std::vector<S>& s) {
  require_nonzero_point(s);
  std::array<S, 6> v;
  for (int k = 1; k <= 6; ++k) v[static_cast<std::size_t>(k - 1)] = elementary_symmetric(k).evaluate(s);
  return make_profile(std::move(v));
}

// Profile of a point given in the coordinates of a twisted model.
template <class S>
SigmaProfile<S> sigma_profile(const SurfaceModel& model, const std::vector<S>& pt) {
  require_nonzero_point(pt);
  std::array<S, 6> v;
  for (int k = 1; k <= 6; ++k) v[static_cast<std::size_t>(k - 1)] = model.sigma[static_cast<std::size_t>(k)].evaluate(pt);
  return make_profile(std::move(v));
}

// Certified nonvanishing: true/false, or nullopt when the value is zero
// only to the working precision.
inline std::optional<bool> certified_nonzero(const Rational& x) { return !x.is_zero(); }
inline std::optional<bool> certified_nonzero(const Cyclo& x) { return !x.is_zero(); }
inline std::optional<bool> certified_nonzero(const FqElt& x) { return !x.is_zero(); }
inline std::optional<bool> certified_nonzero(const PadicApprox& x) {
  if (x.is_exact_zero()) return false;
  if (x.is_indeterminate()) return std::nullopt;
  return true;
}
inline std::optional<bool> certified_nonzero(const UnramifiedElt& x) {
  if (x.valuation().certified) return true;
  return std::nullopt;
}

inline Valuation valuation_of(const PadicApprox& x) { return valuation(x); }
inline Valuation valuation_of(const UnramifiedElt& x) { return x.valuation(); }

template <class S>
struct ModularFormValues {
  S phi2;   // -3 sigma_5^-1 D
  S chi6;   // sigma_3
  S chi10;  // -sigma_5 / 3
  std::optional<S> phi2_cubed_over_chi6;    // absent when chi6 = 0
  S phi2_fifth_over_chi10;
};

template <class S>
ModularFormValues<S> modular_form_values(const SigmaProfile<S>& p) {
  const S& s5 = p.sigma(5);
  std::optional<bool> nz = certified_nonzero(s5);
  if (!nz) throw PrecisionError("sigma_5 vanishes to the working precision", 0);
  if (!*nz) throw DomainError("cusp-form vanishing: sigma_5 = 0, point in bad locus for this test");
  const S& like = s5;
  auto k = [&](long n, long d = 1) { return embed(Rational(n, d), like); };
  S inv5 = inverse(s5);
  ModularFormValues<S> m{k(-3) * inv5 * p.d, p.sigma(3), k(-1, 3) * s5, std::nullopt, S{}};
  S phi3 = m.phi2 * m.phi2 * m.phi2;
  std::optional<bool> nz3 = certified_nonzero(m.chi6);
  if (nz3 && *nz3) m.phi2_cubed_over_chi6 = phi3 * inverse(m.chi6);
  m.phi2_fifth_over_chi10 = phi3 * m.phi2 * m.phi2 * inverse(m.chi10);
  return m;
}

enum class Verdict { Pass, Fail, Indeterminate };
std::string to_string(Verdict v);

// Valuations of u1 = sigma_5^-6 D^5 and u2 = sigma_5^-3 sigma_3^-1 D^3.
// The criterion passes iff both are <= 0. Uncertified inputs are treated
// as intervals [bound, inf): the verdict is Pass only when every input is
// certified, Fail when the lower bounds already exceed 0, and otherwise
// Indeterminate with a larger precision requested.
struct OrdinarityReport {
  Verdict verdict = Verdict::Indeterminate;
  Valuation v_sigma3, v_sigma5, v_d;
  std::optional<long> v_u1, v_u2;
  long precision_needed = 0;
};

OrdinarityReport ordinarity_from_valuations(const Valuation& v3, const Valuation& v5,
                                            const Valuation& vd, long precision = 0);

template <class S>
OrdinarityReport ordinarity_certificate(const SigmaProfile<S>& p, long precision) {
  return ordinarity_from_valuations(valuation_of(p.sigma(3)), valuation_of(p.sigma(5)),
                                    valuation_of(p.d), precision);
}

// True iff D = sigma_3^2 - 4 sigma_6 is certified nonzero; throws
// PrecisionError when D vanishes only to the working precision.
template <class S>
bool curve_V_avoidance(const SigmaProfile<S>& p) {
  std::optional<bool> nz = certified_nonzero(p.d);
  if (!nz) throw PrecisionError("D vanishes to the working precision", 0);
  return *nz;
}

}  // namespace hmsl
