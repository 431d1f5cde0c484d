#include "hmsl/exact/rational.hpp"

#include <ostream>

#include "hmsl/errors.hpp"

namespace hmsl {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw DomainError("malformed integer '" + std::string(s) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)),
                  parse_integer(text.substr(slash + 1)));
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Integer Rational::floor() const {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return r;
}

Integer Rational::round() const {
  // ceil(x - 1/2)
  Rational shifted = *this - Rational(1, 2);
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), shifted.v_.get_num_mpz_t(),
             shifted.v_.get_den_mpz_t());
  return c;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

long valuation(const Rational& x, long p) {
  if (x.is_zero()) throw DomainError("valuation of zero");
  Integer pp(p);
  return valuation(x.numerator(), pp) - valuation(x.denominator(), pp);
}

Rational pow(const Rational& x, long exponent) {
  if (exponent < 0) return pow(x.inverse(), -exponent);
  Rational r(1);
  Rational b = x;
  unsigned long e = static_cast<unsigned long>(exponent);
  while (e) {
    if (e & 1UL) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

}  // namespace hmsl
