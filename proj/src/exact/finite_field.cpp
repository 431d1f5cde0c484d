#include "hmsl/exact/finite_field.hpp"

#include <ostream>

#include "hmsl/errors.hpp"

namespace hmsl {

namespace {

constexpr std::int64_t kMaxPrime = 10000;

std::int64_t reduce(std::int64_t x, std::int64_t p) {
  x %= p;
  return x < 0 ? x + p : x;
}

std::int64_t pow_mod(std::int64_t b, std::uint64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  b = reduce(b, p);
  while (e) {
    if (e & 1U) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

bool is_residue(std::int64_t a, std::int64_t p) {
  a = reduce(a, p);
  return a == 0 || pow_mod(a, static_cast<std::uint64_t>((p - 1) / 2), p) == 1;
}

void check_prime(std::int64_t p) {
  if (p < 2 || p > kMaxPrime || !is_prime(p)) {
    throw DomainError("finite field characteristic must be a prime <= 10^4, got " +
                      std::to_string(p));
  }
}

}  // namespace

Fq Fq::prime_field(std::int64_t p) {
  check_prime(p);
  return Fq{p, 1, 0};
}

Fq Fq::quadratic(std::int64_t p) {
  check_prime(p);
  if (p == 2) throw DomainError("F_4 is not supported");
  std::int64_t n = reduce(-3, p);
  if (p % 3 != 2) {
    n = 2;
    while (is_residue(n, p)) ++n;
  }
  return Fq{p, 2, n};
}

FqElt::FqElt(const Fq& field, std::int64_t c0, std::int64_t c1)
    : field_(field), c0_(reduce(c0, field.p)), c1_(reduce(c1, field.p)) {
  if (field.degree == 1 && c1_ != 0) {
    throw DomainError("prime field element with a w-coordinate");
  }
}

FqElt FqElt::from_rational(const Fq& field, const Rational& x) {
  Integer p(field.p);
  Integer den = mod(x.denominator(), p);
  if (den == 0) {
    throw DomainError("denominator of " + x.str() + " vanishes mod " +
                      std::to_string(field.p));
  }
  Integer v = mod(x.numerator() * inverse_mod(den, p), p);
  return FqElt(field, v.get_si());
}

FqElt FqElt::sqrt_minus3(const Fq& field) {
  if (field.degree == 2 && field.nonresidue == reduce(-3, field.p)) {
    return FqElt(field, 0, 1);
  }
  for (const FqElt& x : elements(field)) {
    if (x * x == FqElt(field, -3)) return x;
  }
  throw DomainError("-3 has no square root in this field");
}

FqElt FqElt::omega(const Fq& field) {
  if (field.p == 3) throw DomainError("no primitive cube root of 1 in char 3");
  return (FqElt(field, -1) + sqrt_minus3(field)) / FqElt(field, 2);
}

std::vector<FqElt> FqElt::elements(const Fq& field) {
  std::vector<FqElt> out;
  out.reserve(static_cast<std::size_t>(field.order()));
  std::int64_t top = field.degree == 2 ? field.p : 1;
  for (std::int64_t c1 = 0; c1 < top; ++c1) {
    for (std::int64_t c0 = 0; c0 < field.p; ++c0) out.emplace_back(field, c0, c1);
  }
  return out;
}

void FqElt::check_same(const FqElt& o) const {
  if (!(field_ == o.field_)) throw DomainError("mixed finite fields");
}

FqElt& FqElt::operator+=(const FqElt& o) {
  check_same(o);
  c0_ = (c0_ + o.c0_) % field_.p;
  c1_ = (c1_ + o.c1_) % field_.p;
  return *this;
}

FqElt& FqElt::operator-=(const FqElt& o) {
  check_same(o);
  c0_ = reduce(c0_ - o.c0_, field_.p);
  c1_ = reduce(c1_ - o.c1_, field_.p);
  return *this;
}

FqElt& FqElt::operator*=(const FqElt& o) {
  check_same(o);
  const std::int64_t p = field_.p;
  std::int64_t n0 = (c0_ * o.c0_ + (c1_ * o.c1_ % p) * field_.nonresidue) % p;
  std::int64_t n1 = (c0_ * o.c1_ + c1_ * o.c0_) % p;
  c0_ = n0;
  c1_ = n1;
  return *this;
}

FqElt FqElt::operator-() const { return FqElt(field_, -c0_, -c1_); }

FqElt FqElt::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in F_q");
  const std::int64_t p = field_.p;
  // (c0 + c1 w)^-1 = (c0 - c1 w) / (c0^2 - n c1^2)
  std::int64_t norm = reduce(c0_ * c0_ - (c1_ * c1_ % p) * field_.nonresidue, p);
  std::int64_t inv = pow_mod(norm, static_cast<std::uint64_t>(p - 2), p);
  return FqElt(field_, c0_ * inv % p, reduce(-c1_, p) * inv % p);
}

FqElt FqElt::pow(std::uint64_t e) const {
  FqElt r(field_, 1);
  FqElt b = *this;
  while (e) {
    if (e & 1U) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::string FqElt::str() const {
  if (c1_ == 0) return std::to_string(c0_);
  std::string w = c1_ == 1 ? "w" : std::to_string(c1_) + "w";
  if (c0_ == 0) return w;
  return std::to_string(c0_) + "+" + w;
}

std::ostream& operator<<(std::ostream& os, const FqElt& x) {
  return os << x.str();
}

}  // namespace hmsl
