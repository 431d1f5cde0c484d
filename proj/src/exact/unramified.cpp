#include "hmsl/exact/unramified.hpp"

#include <algorithm>

#include "hmsl/errors.hpp"
#include "hmsl/exact/finite_field.hpp"

namespace hmsl {

namespace {

// Evaluates the monic polynomial y^f + sum c_i y^i at x.
template <class F>
F eval_monic(const std::vector<long>& c, const F& x) {
  F acc = x;  // leading 1 times x, then Horner
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc + F(x.field(), c[i]);
    if (i > 0) acc = acc * x;
  }
  return acc;
}

bool irreducible_mod_p(long p, const std::vector<long>& c) {
  const int f = static_cast<int>(c.size());
  if (f == 1) return true;
  // Degree <= 3: reducible iff a root in F_p. Degree 4: iff a root in F_{p^2}.
  Fq field = f <= 3 ? Fq::prime_field(p) : Fq::quadratic(p);
  for (const FqElt& x : FqElt::elements(field)) {
    if (eval_monic(c, x).is_zero()) return false;
  }
  return true;
}

std::vector<long> smallest_irreducible(long p, int f) {
  std::vector<long> c(static_cast<std::size_t>(f), 0);
  while (true) {
    if (irreducible_mod_p(p, c)) return c;
    std::size_t i = 0;
    while (i < c.size() && ++c[i] == p) c[i++] = 0;
    if (i == c.size()) throw DomainError("no irreducible polynomial found");
  }
}

}  // namespace

UnramifiedRing::UnramifiedRing(long p, long n, std::vector<Integer> modulus)
    : p_(p), n_(n), pn_(pow(Integer(p), static_cast<unsigned long>(n))),
      modulus_(std::move(modulus)) {
  for (Integer& c : modulus_) c = hmsl::mod(c, pn_);
}

std::shared_ptr<const UnramifiedRing> UnramifiedRing::make(long p, int degree,
                                                           long precision) {
  if (!is_prime(p) || p == 2) throw DomainError("unramified ring needs an odd prime");
  if (degree < 1 || degree > 4) throw DomainError("residue degree must be 1..4");
  if (precision < 1) throw DomainError("precision must be positive");
  std::vector<Integer> m;
  for (long c : smallest_irreducible(p, degree)) m.emplace_back(c);
  return std::shared_ptr<const UnramifiedRing>(
      new UnramifiedRing(p, precision, std::move(m)));
}

std::shared_ptr<const UnramifiedRing> UnramifiedRing::with_precision(
    long precision) const {
  if (precision < 1) throw PrecisionError("precision exhausted", 1);
  return std::shared_ptr<const UnramifiedRing>(
      new UnramifiedRing(p_, precision, modulus_));
}

UnramifiedElt::UnramifiedElt(UnramifiedRingPtr ring)
    : ring_(std::move(ring)),
      c_(static_cast<std::size_t>(ring_->degree()), Integer(0)) {}

UnramifiedElt::UnramifiedElt(UnramifiedRingPtr ring, std::vector<Integer> coords)
    : ring_(std::move(ring)), c_(std::move(coords)) {
  if (c_.size() != static_cast<std::size_t>(ring_->degree())) {
    throw DomainError("coordinate count does not match the residue degree");
  }
  for (Integer& c : c_) c = mod(c, ring_->modulus_power());
}

UnramifiedElt UnramifiedElt::from_integer(UnramifiedRingPtr ring,
                                          const Integer& n) {
  UnramifiedElt r(std::move(ring));
  r.c_[0] = mod(n, r.ring_->modulus_power());
  return r;
}

UnramifiedElt UnramifiedElt::from_rational(UnramifiedRingPtr ring,
                                           const Rational& x) {
  const Integer& pn = ring->modulus_power();
  if (mod(x.denominator(), Integer(ring->prime())) == 0) {
    throw DomainError("rational " + x.str() + " is not p-integral for p = " +
                      std::to_string(ring->prime()));
  }
  Integer v = mod(x.numerator() * inverse_mod(x.denominator(), pn), pn);
  return from_integer(std::move(ring), v);
}

UnramifiedElt UnramifiedElt::generator(UnramifiedRingPtr ring) {
  UnramifiedElt r(std::move(ring));
  if (r.c_.size() == 1) {
    // y = -m_0 when m = y + m_0
    r.c_[0] = mod(-r.ring_->modulus()[0], r.ring_->modulus_power());
  } else {
    r.c_[1] = 1;
  }
  return r;
}

std::vector<UnramifiedElt> UnramifiedElt::residue_elements(
    UnramifiedRingPtr ring) {
  if (ring->precision() != 1) {
    throw DomainError("residue_elements needs a precision-1 ring");
  }
  const long p = ring->prime();
  const int f = ring->degree();
  std::vector<UnramifiedElt> out;
  std::vector<long> digits(static_cast<std::size_t>(f), 0);
  while (true) {
    std::vector<Integer> c;
    for (long d : digits) c.emplace_back(d);
    out.emplace_back(ring, std::move(c));
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return out;
}

bool UnramifiedElt::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Integer& c) { return c == 0; });
}

bool UnramifiedElt::is_unit() const {
  Integer p(ring_->prime());
  return std::any_of(c_.begin(), c_.end(),
                     [&](const Integer& c) { return mod(c, p) != 0; });
}

Valuation UnramifiedElt::valuation() const {
  if (is_zero()) return Valuation::at_least(ring_->precision());
  long best = ring_->precision();
  Integer p(ring_->prime());
  for (const Integer& c : c_) {
    if (c != 0) best = std::min(best, hmsl::valuation(c, p));
  }
  return Valuation::exact(best);
}

UnramifiedElt UnramifiedElt::reduce(long precision) const {
  if (precision > ring_->precision()) {
    throw DomainError("reduce cannot raise precision");
  }
  return UnramifiedElt(ring_->with_precision(precision), c_);
}

UnramifiedElt UnramifiedElt::lift(long precision) const {
  if (precision < ring_->precision()) return reduce(precision);
  return UnramifiedElt(ring_->with_precision(precision), c_);
}

UnramifiedElt UnramifiedElt::divide_by_p_power(long k) const {
  if (k == 0) return *this;
  Valuation v = valuation();
  if (v.value < k) throw DomainError("element not divisible by p^k");
  if (k >= ring_->precision()) {
    throw PrecisionError("division by p^" + std::to_string(k) +
                             " exhausts precision " +
                             std::to_string(ring_->precision()),
                         k + 1);
  }
  Integer pk = hmsl::pow(Integer(ring_->prime()), static_cast<unsigned long>(k));
  std::vector<Integer> c;
  for (const Integer& x : c_) c.push_back(x / pk);
  return UnramifiedElt(ring_->with_precision(ring_->precision() - k), std::move(c));
}

UnramifiedElt UnramifiedElt::inverse() const {
  if (!is_unit()) throw DomainError("inverse of a non-unit");
  // Residue-field inverse as x^(q-2), then Newton x <- x(2 - a x).
  UnramifiedElt a1 = reduce(1);
  unsigned long q = 1;
  for (int i = 0; i < ring_->degree(); ++i) q *= static_cast<unsigned long>(ring_->prime());
  UnramifiedElt x = a1.pow(q - 2).lift(ring_->precision());
  UnramifiedElt two = from_integer(ring_, 2);
  for (long known = 1; known < ring_->precision(); known *= 2) {
    x = x * (two - *this * x);
  }
  return x;
}

UnramifiedElt UnramifiedElt::pow(unsigned long e) const {
  UnramifiedElt r = from_integer(ring_, 1);
  UnramifiedElt b = *this;
  while (e) {
    if (e & 1UL) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

void UnramifiedElt::check_ring(const UnramifiedElt& o) const {
  if (ring_ == o.ring_) return;
  if (ring_->prime() != o.ring_->prime() ||
      ring_->precision() != o.ring_->precision() ||
      ring_->modulus() != o.ring_->modulus()) {
    throw DomainError("mixed unramified rings");
  }
}

UnramifiedElt& UnramifiedElt::operator+=(const UnramifiedElt& o) {
  check_ring(o);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    c_[i] += o.c_[i];
    if (c_[i] >= ring_->modulus_power()) c_[i] -= ring_->modulus_power();
  }
  return *this;
}

UnramifiedElt& UnramifiedElt::operator-=(const UnramifiedElt& o) {
  check_ring(o);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    c_[i] -= o.c_[i];
    if (c_[i] < 0) c_[i] += ring_->modulus_power();
  }
  return *this;
}

UnramifiedElt& UnramifiedElt::operator*=(const UnramifiedElt& o) {
  check_ring(o);
  const std::size_t f = c_.size();
  std::vector<Integer> prod(2 * f - 1, Integer(0));
  for (std::size_t i = 0; i < f; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < f; ++j) prod[i + j] += c_[i] * o.c_[j];
  }
  const std::vector<Integer>& m = ring_->modulus();
  for (std::size_t k = prod.size(); k-- > f;) {
    if (prod[k] == 0) continue;
    // y^k = y^(k-f) * y^f = -y^(k-f) * sum m_i y^i
    for (std::size_t i = 0; i < f; ++i) prod[k - f + i] -= prod[k] * m[i];
    prod[k] = 0;
  }
  for (std::size_t i = 0; i < f; ++i) c_[i] = mod(prod[i], ring_->modulus_power());
  return *this;
}

UnramifiedElt UnramifiedElt::operator-() const {
  UnramifiedElt r(ring_);
  return r -= *this;
}

bool operator==(const UnramifiedElt& x, const UnramifiedElt& y) {
  return x.ring_->prime() == y.ring_->prime() &&
         x.ring_->precision() == y.ring_->precision() && x.c_ == y.c_;
}

std::string UnramifiedElt::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ", ";
    s += c_[i].get_str();
  }
  return s + ") mod " + std::to_string(ring_->prime()) + "^" +
         std::to_string(ring_->precision());
}

}  // namespace hmsl
