#include "hmsl/exact/padic.hpp"

#include <algorithm>
#include <ostream>

#include "hmsl/errors.hpp"
#include "hmsl/exact/scalar.hpp"

namespace hmsl {

std::string Valuation::str() const {
  return certified ? std::to_string(value) : ">=" + std::to_string(value);
}

PadicApprox::PadicApprox(long p, long valuation, Integer unit, long precision)
    : p_(p), v_(valuation), unit_(std::move(unit)), prec_(precision) {
  if (p < 2 || !is_prime(p)) throw DomainError("p-adic prime must be prime");
  if (precision < 1) throw DomainError("p-adic precision must be positive");
  normalize();
}

PadicApprox PadicApprox::zero(long p, long absolute_precision) {
  PadicApprox z;
  z.p_ = p;
  z.unit_ = 0;
  z.prec_ = std::max(1L, absolute_precision);
  z.v_ = absolute_precision - z.prec_;
  return z;
}

long PadicApprox::absolute_precision() const {
  if (prec_ >= kExact) return kExact;
  return v_ + prec_;
}

// Pulls powers of p out of the unit and reduces it modulo p^precision.
void PadicApprox::normalize() {
  if (prec_ >= kExact) {
    if (unit_ == 0) return;
    Integer pp(p_);
    long k = hmsl::valuation(unit_, pp);
    if (k > 0) {
      unit_ /= pow(pp, static_cast<unsigned long>(k));
      v_ += k;
    }
    return;
  }
  Integer pp(p_);
  Integer modulus = pow(pp, static_cast<unsigned long>(prec_));
  Integer u = mod(unit_, modulus);
  if (u == 0) {
    unit_ = 0;
    return;
  }
  long k = hmsl::valuation(u, pp);
  if (k > 0) {
    // Shifting the unit out of the known digits costs relative precision.
    u /= pow(pp, static_cast<unsigned long>(k));
    v_ += k;
    prec_ -= k;
    u = mod(u, pow(pp, static_cast<unsigned long>(prec_)));
  }
  unit_ = u;
}

Valuation PadicApprox::valuation() const {
  if (unit_ == 0) return Valuation::at_least(absolute_precision());
  return Valuation::exact(v_);
}

Rational PadicApprox::approximant() const {
  if (unit_ == 0) return Rational(0);
  Rational pv = pow(Rational(p_), v_);
  return pv * Rational(unit_);
}

PadicApprox PadicApprox::with_precision(long n) const {
  if (n < 1) throw DomainError("p-adic precision must be positive");
  if (n >= prec_) return *this;
  PadicApprox r = *this;
  if (unit_ == 0) {
    long abs = absolute_precision();
    r.prec_ = n;
    r.v_ = abs - n;
    return r;
  }
  r.prec_ = n;
  r.normalize();
  return r;
}

PadicApprox PadicApprox::inverse() const {
  if (unit_ == 0) {
    throw PrecisionError("inverse of a p-adic value that is zero at precision " +
                             std::to_string(absolute_precision()),
                         absolute_precision() + 1);
  }
  if (prec_ >= kExact) {
    // An exact value whose inverse is not a finite p-adic expansion is
    // only kept when it is +-1.
    if (unit_ == 1 || unit_ == -1) return PadicApprox(p_, -v_, unit_, kExact);
    throw DomainError("inverse of an exact p-adic value needs a precision");
  }
  Integer modulus = pow(Integer(p_), static_cast<unsigned long>(prec_));
  return PadicApprox(p_, -v_, inverse_mod(unit_, modulus), prec_);
}

void PadicApprox::check_prime(const PadicApprox& o) const {
  if (p_ != o.p_) throw DomainError("mixed p-adic primes");
}

PadicApprox& PadicApprox::operator+=(const PadicApprox& o) {
  check_prime(o);
  if (o.is_exact_zero()) return *this;
  if (is_exact_zero()) return *this = o;
  const long abs = std::min(absolute_precision(), o.absolute_precision());
  const long rel = std::min(prec_, o.prec_);
  const bool x_known = unit_ != 0;
  const bool y_known = o.unit_ != 0;
  if (!x_known && !y_known) return *this = zero(p_, abs).with_precision(rel);
  long vmin = kExact;
  if (x_known) vmin = std::min(vmin, v_);
  if (y_known) vmin = std::min(vmin, o.v_);
  if (abs <= vmin) return *this = zero(p_, abs).with_precision(rel);
  Integer pp(p_);
  Integer s = 0;
  if (x_known) s += unit_ * pow(pp, static_cast<unsigned long>(v_ - vmin));
  if (y_known) s += o.unit_ * pow(pp, static_cast<unsigned long>(o.v_ - vmin));
  if (abs >= kExact) {
    if (s == 0) return *this = exact_zero(p_);
    return *this = PadicApprox(p_, vmin, s, kExact);
  }
  Integer window = pow(pp, static_cast<unsigned long>(abs - vmin));
  s = mod(s, window);
  if (s == 0) return *this = zero(p_, abs).with_precision(rel);
  long k = hmsl::valuation(s, pp);
  long val = vmin + k;
  *this = PadicApprox(p_, val, s / pow(pp, static_cast<unsigned long>(k)),
                      abs - val);
  return *this;
}

PadicApprox& PadicApprox::operator*=(const PadicApprox& o) {
  check_prime(o);
  if (is_exact_zero()) return *this;
  if (o.is_exact_zero()) return *this = o;
  const long rel = std::min(prec_, o.prec_);
  if (unit_ == 0 || o.unit_ == 0) {
    // Bound on the product: (bound or valuation) + (bound or valuation).
    long bx = unit_ == 0 ? absolute_precision() : v_;
    long by = o.unit_ == 0 ? o.absolute_precision() : o.v_;
    return *this = zero(p_, bx + by).with_precision(rel);
  }
  if (rel >= kExact) {
    return *this = PadicApprox(p_, v_ + o.v_, unit_ * o.unit_, kExact);
  }
  *this = PadicApprox(p_, v_ + o.v_, unit_ * o.unit_, rel);
  return *this;
}

PadicApprox PadicApprox::operator-() const {
  PadicApprox r = *this;
  r.unit_ = -r.unit_;
  if (r.unit_ != 0) r.normalize();
  return r;
}

std::string PadicApprox::str() const {
  if (is_exact_zero()) return "0";
  if (unit_ == 0) return "O(" + std::to_string(p_) + "^" +
                         std::to_string(absolute_precision()) + ")";
  std::string s = unit_.get_str();
  if (v_ != 0) s += "*" + std::to_string(p_) + "^" + std::to_string(v_);
  if (prec_ < kExact) {
    s += " + O(" + std::to_string(p_) + "^" +
         std::to_string(absolute_precision()) + ")";
  }
  return s;
}

Valuation valuation(const PadicApprox& x) { return x.valuation(); }

PadicApprox lift_to_padic(const Rational& x, long p, long n) {
  if (x.is_zero()) {
    throw DomainError("lift_to_padic: zero has no exact valuation");
  }
  if (n < 1) throw DomainError("p-adic precision must be positive");
  Integer pp(p);
  long v = valuation(x, p);
  Integer num = x.numerator();
  Integer den = x.denominator();
  if (v > 0) num /= pow(pp, static_cast<unsigned long>(v));
  if (v < 0) den /= pow(pp, static_cast<unsigned long>(-v));
  Integer modulus = pow(pp, static_cast<unsigned long>(n));
  Integer unit = mod(num * inverse_mod(den, modulus), modulus);
  return PadicApprox(p, v, unit, n);
}

PadicApprox embed(const Rational& c, const PadicApprox& like) {
  if (c.is_zero()) return PadicApprox::exact_zero(like.prime());
  if (c.is_integer()) {
    return PadicApprox(like.prime(), 0, c.numerator(), PadicApprox::kExact);
  }
  long n = like.precision() >= PadicApprox::kExact ? 64 : like.precision();
  return lift_to_padic(c, like.prime(), n);
}

std::ostream& operator<<(std::ostream& os, const PadicApprox& x) {
  return os << x.str();
}

}  // namespace hmsl
