#include "hmsl/surface/twist.hpp"

#include "hmsl/errors.hpp"

namespace hmsl {

std::vector<std::string> TwistData::coordinate_names() const {
  std::vector<std::string> n;
  for (int i = 0; i < 6; ++i) n.push_back(coordinate_prefix + std::to_string(i));
  return n;
}

namespace {

Matrix<Cyclo> zero6() { return Matrix<Cyclo>(6, 6, Cyclo(0)); }

}  // namespace

TwistData identity_twist() {
  return {"identity", Matrix<Cyclo>::identity(6, Cyclo(1), Cyclo(0)), Rational(1), Rational(1), "s"};
}

TwistData rho0_twist() {
  const Cyclo r = Cyclo::sqrt_minus3();
  Matrix<Cyclo> m = zero6();
  m(0, 0) = 1;
  m(0, 1) = r;
  m(1, 0) = 1;
  m(1, 1) = -r;
  m(2, 2) = 1;
  m(2, 3) = r;
  m(3, 2) = 1;
  m(3, 3) = -r;
  m(4, 4) = 1;
  m(5, 5) = 1;
  return {"rho0-archimedean", m, Rational(1), Rational(1), "t"};
}

TwistData char3_twist(const Rational& lambda1, const Rational& lambda2) {
  if (lambda1.is_zero() || lambda2.is_zero()) throw DomainError("lambda must be nonzero");
  const Cyclo w = Cyclo::omega(), w2 = w * w;
  // x = A s with the blocks (x0, x1, x4) <- (s0, s1, s4) and
  // (x2, x3, x5) <- (s2, s3, s5).
  Matrix<Cyclo> a = zero6();
  auto block = [&](int i0, int i1, int i4, int s0, int s1, int s4) {
    a(i0, s0) = w;
    a(i0, s1) = w2;
    a(i0, s4) = 1;
    a(i1, s0) = w2;
    a(i1, s1) = w;
    a(i1, s4) = 1;
    a(i4, s0) = 1;
    a(i4, s1) = 1;
    a(i4, s4) = 1;
  };
  block(0, 1, 4, 0, 1, 4);
  block(2, 3, 5, 2, 3, 5);
  Matrix<Cyclo> ainv = a.inverse_matrix(Cyclo(1), Cyclo(0));
  Matrix<Cyclo> d = Matrix<Cyclo>::identity(6, Cyclo(1), Cyclo(0));
  d(0, 0) = Cyclo(lambda1);
  d(1, 1) = Cyclo(lambda1.inverse());
  d(2, 2) = Cyclo(lambda2);
  d(3, 3) = Cyclo(lambda2.inverse());
  return {"char3-x", ainv * d, lambda1, lambda2, "x"};
}

TwistData builtin_twist(const std::string& name, const Rational& lambda1,
                        const Rational& lambda2) {
  if (name == "identity") return identity_twist();
  if (name == "rho0-archimedean") return rho0_twist();
  if (name == "char3-x") return char3_twist(lambda1, lambda2);
  throw ConfigError("unknown twist '" + name + "'");
}

std::vector<std::string> builtin_twist_names() {
  return {"identity", "rho0-archimedean", "char3-x"};
}

}  // namespace hmsl
