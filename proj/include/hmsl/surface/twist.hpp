#pragma once

#include <string>
#include <vector>

#include "hmsl/exact/cyclo.hpp"
#include "hmsl/exact/matrix.hpp"
#include "hmsl/exact/rational.hpp"

namespace hmsl {

// A change of coordinates s = M * y over Q(omega): the matrix maps model
// coordinates y to the standard coordinates s_0..s_5.
struct TwistData {
  std::string label;
  Matrix<Cyclo> matrix;
  Rational lambda1{1};
  Rational lambda2{1};
  std::string coordinate_prefix = "s";

  std::vector<std::string> coordinate_names() const;
};

TwistData identity_twist();

// s = (t0 + sqrt(-3) t1, t0 - sqrt(-3) t1, t2 + sqrt(-3) t3, t2 - sqrt(-3) t3, t4, t5).
TwistData rho0_twist();

// x-coordinates x0 = w s0 + w^2 s1 + s4, x1 = w^2 s0 + w s1 + s4,
// x4 = s0 + s1 + s4 (and likewise x2, x3, x5 from s2, s3, s5), rescaled so
// that x0, x1, x2, x3 carry the factors lambda1, 1/lambda1, lambda2,
// 1/lambda2. Throws DomainError for a zero lambda.
TwistData char3_twist(const Rational& lambda1, const Rational& lambda2);

// "identity", "rho0-archimedean" or "char3-x".
TwistData builtin_twist(const std::string& name, const Rational& lambda1 = Rational(1),
                        const Rational& lambda2 = Rational(1));

std::vector<std::string> builtin_twist_names();

}  // namespace hmsl
