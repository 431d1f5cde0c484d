#include "hmsl/surface/model.hpp"

#include "hmsl/errors.hpp"
#include "hmsl/mpoly/symmetric.hpp"

namespace hmsl {

ScaledPoly normalize_integral(const RPoly& f) {
  if (f.is_zero()) return {f, Rational(1)};
  Integer den(1), num(0);
  for (const auto& [e, c] : f.terms()) {
    den = lcm(den, c.denominator());
    num = gcd(num, c.numerator());
  }
  Rational scale(den, num);
  if (f.terms().begin()->second.sign() < 0) scale = -scale;
  return {f.scaled(scale), scale};
}

bool is_conjugation_stable(const SparsePoly<Cyclo>& f) {
  for (const auto& [e, c] : f.terms())
    if (!(galois_conjugate(c) == c)) return false;
  return true;
}

SurfaceModel twisted_equations(const TwistData& tw) {
  if (tw.matrix.rows() != 6 || tw.matrix.cols() != 6) throw DomainError("twist matrix must be 6x6");
  if (tw.matrix.rank() < 6) throw DomainError("twist matrix is singular");
  std::vector<SparsePoly<Cyclo>> forms;
  for (std::size_t i = 0; i < 6; ++i) {
    SparsePoly<Cyclo> g(6);
    for (std::size_t j = 0; j < 6; ++j) {
      Exponent e(6, 0);
      e[j] = 1;
      g.add_term(e, tw.matrix(i, j));
    }
    forms.push_back(std::move(g));
  }
  SurfaceModel m;
  m.twist = tw;
  for (int k = 1; k <= 6; ++k) {
    SparsePoly<Cyclo> s = elementary_symmetric(k).substitute(forms, Cyclo(1));
    if (!is_conjugation_stable(s)) {
      throw DomainError("twist '" + tw.label + "' does not give rational equations (sigma_" +
                        std::to_string(k) + ")");
    }
    m.sigma[static_cast<std::size_t>(k)] = s.map_coeffs([](const Cyclo& c) { return c.a(); });
  }
  const std::array<int, 3> idx{1, 2, 4};
  std::array<RPoly*, 3> out{&m.q1, &m.q2, &m.q4};
  for (std::size_t i = 0; i < 3; ++i) {
    ScaledPoly sp = normalize_integral(m.sigma[static_cast<std::size_t>(idx[i])]);
    *out[i] = sp.primitive;
    m.scales[i] = sp.scale;
  }
  m.curve_v = m.sigma[3] * m.sigma[3] - m.sigma[6].scaled(Rational(4));
  return m;
}

}  // namespace hmsl
