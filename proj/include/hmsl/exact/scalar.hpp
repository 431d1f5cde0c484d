#pragma once

// Uniform ring interface used by the generic polynomial and matrix code:
// is_zero, zero_like, one_like and embed (image of a rational coefficient
// in the ring of a sample element).

#include "hmsl/exact/cyclo.hpp"
#include "hmsl/exact/finite_field.hpp"
#include "hmsl/exact/padic.hpp"
#include "hmsl/exact/rational.hpp"
#include "hmsl/exact/unramified.hpp"

namespace hmsl {

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Cyclo& x) { return x.is_zero(); }
inline bool is_zero(const FqElt& x) { return x.is_zero(); }
inline bool is_zero(const UnramifiedElt& x) { return x.is_zero(); }
// Only exact zeros may be dropped from a polynomial.
inline bool is_zero(const PadicApprox& x) { return x.is_exact_zero(); }

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Cyclo zero_like(const Cyclo&) { return Cyclo(0); }
inline FqElt zero_like(const FqElt& x) { return FqElt(x.field(), 0); }
inline UnramifiedElt zero_like(const UnramifiedElt& x) {
  return UnramifiedElt(x.ring());
}
inline PadicApprox zero_like(const PadicApprox& x) {
  return PadicApprox::exact_zero(x.prime());
}

inline Rational one_like(const Rational&) { return Rational(1); }
inline Cyclo one_like(const Cyclo&) { return Cyclo(1); }
inline FqElt one_like(const FqElt& x) { return FqElt(x.field(), 1); }
inline UnramifiedElt one_like(const UnramifiedElt& x) {
  return UnramifiedElt::from_integer(x.ring(), 1);
}
inline PadicApprox one_like(const PadicApprox& x) {
  return PadicApprox(x.prime(), 0, 1, PadicApprox::kExact);
}

inline Rational embed(const Rational& c, const Rational&) { return c; }
inline Cyclo embed(const Rational& c, const Cyclo&) { return Cyclo(c); }
inline FqElt embed(const Rational& c, const FqElt& like) {
  return FqElt::from_rational(like.field(), c);
}
inline UnramifiedElt embed(const Rational& c, const UnramifiedElt& like) {
  return UnramifiedElt::from_rational(like.ring(), c);
}
PadicApprox embed(const Rational& c, const PadicApprox& like);

inline Cyclo embed(const Cyclo& c, const Cyclo&) { return c; }
// a + b*omega with omega = (-1 + sqrt(-3))/2 in F_q (p != 3).
inline FqElt embed(const Cyclo& c, const FqElt& like) {
  return FqElt::from_rational(like.field(), c.a()) +
         FqElt::from_rational(like.field(), c.b()) * FqElt::omega(like.field());
}

template <class R>
R inverse(const R& x) {
  return x.inverse();
}
inline Rational inverse(const Rational& x) { return x.inverse(); }

}  // namespace hmsl
