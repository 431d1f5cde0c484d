#include "hmsl/exact/cyclo.hpp"

#include <ostream>

#include "hmsl/errors.hpp"

namespace hmsl {

Rational Cyclo::norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

Cyclo Cyclo::inverse() const {
  Rational n = norm();
  if (n.is_zero()) throw DomainError("inverse of zero in Q(omega)");
  Cyclo c = galois_conjugate(*this);
  return Cyclo(c.a_ / n, c.b_ / n);
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

// (a + b w)(c + d w) = (ac - bd) + (ad + bc - bd) w, using w^2 = -1 - w.
Cyclo& Cyclo::operator*=(const Cyclo& o) {
  Rational bd = b_ * o.b_;
  Rational na = a_ * o.a_ - bd;
  Rational nb = a_ * o.b_ + b_ * o.a_ - bd;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

std::string Cyclo::str() const {
  if (b_.is_zero()) return a_.str();
  std::string s = a_.is_zero() ? "" : a_.str() + (b_.sign() > 0 ? "+" : "");
  if (b_ == Rational(1)) return s + "w";
  if (b_ == Rational(-1)) return s + "-w";
  return s + b_.str() + "*w";
}

Cyclo galois_conjugate(const Cyclo& x) {
  // a + b(-1 - w)
  return Cyclo(x.a() - x.b(), -x.b());
}

std::ostream& operator<<(std::ostream& os, const Cyclo& x) {
  return os << x.str();
}

}  // namespace hmsl
