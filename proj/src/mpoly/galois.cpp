#include "hmsl/mpoly/galois.hpp"

#include <algorithm>

#include "hmsl/errors.hpp"

namespace hmsl {

std::string to_string(GaloisLabel label) {
  switch (label) {
    case GaloisLabel::S4: return "S4";
    case GaloisLabel::A4: return "A4";
    case GaloisLabel::D4: return "D4";
    case GaloisLabel::V4: return "V4";
    case GaloisLabel::C4: return "C4";
    case GaloisLabel::C2: return "C2";
    case GaloisLabel::C1: return "C1";
    case GaloisLabel::ReducibleComposite: return "reducible-composite";
  }
  return "?";
}

bool is_rational_square(const Rational& x) {
  if (x.sign() < 0) return false;
  return is_perfect_square(x.numerator()) && is_perfect_square(x.denominator());
}

namespace {

// Discriminant of a_0 + a_1 x + ... for degree 2 and 3.
Rational small_discriminant(const IntForm& f) {
  if (f.size() == 3) {
    const Integer &c = f[0], &b = f[1], &a = f[2];
    return Rational(Integer(b * b - 4 * a * c));
  }
  if (f.size() == 4) {
    const Integer &d = f[0], &c = f[1], &b = f[2], &a = f[3];
    return Rational(Integer(b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d -
                    27 * a * a * d * d + 18 * a * b * c * d));
  }
  throw DomainError("small discriminant needs degree 2 or 3");
}

int count_linear(const std::vector<IntForm>& factors) {
  int n = 0;
  for (const auto& g : factors)
    if (form_degree(g) == 1) ++n;
  return n;
}

// A monic integer cubic y^3 + c2 y^2 + c1 y + c0 given low to high.
IntForm cubic_form(const Integer& c0, const Integer& c1, const Integer& c2) {
  return IntForm{c0, c1, c2, Integer(1)};
}

// x^2 + b x + c splits over Q(sqrt(delta)).
bool splits_over(const Rational& disc, const Rational& delta) {
  return disc.is_zero() || is_rational_square(disc) || is_rational_square(disc * delta);
}

}  // namespace

QuarticGaloisGroup irreducible_galois_group(const IntForm& f) {
  QuarticGaloisGroup g;
  const int d = form_degree(f);
  g.factor_degrees = {d};
  if (d == 1) return g;
  if (d == 2) {
    g.label = GaloisLabel::C2;
    g.order = 2;
    return g;
  }
  if (d == 3) {
    g.label = GaloisLabel::ReducibleComposite;
    g.order = is_rational_square(small_discriminant(f)) ? 3 : 6;
    return g;
  }
  if (d != 4) throw DomainError("Galois groups are implemented up to degree 4");
  // Monic transform y = A x: y^4 + B y^3 + AC y^2 + A^2 D y + A^3 E.
  const Integer A = f[4];
  const Integer a = f[3], b = A * f[2], c = A * A * f[1], dd = A * A * A * f[0];
  // Resolvent cubic with roots r1 r2 + r3 r4 and its conjugates.
  IntForm res = cubic_form(-(a * a * dd - 4 * b * dd + c * c), a * c - 4 * dd, -b);
  std::vector<IntForm> rf = factor_over_Q(res);
  const Rational delta = discriminant(quartic_from_form(f));
  const int roots = count_linear(rf);
  if (roots == 0) {
    bool square = is_rational_square(delta);
    g.label = square ? GaloisLabel::A4 : GaloisLabel::S4;
    g.order = square ? 12 : 24;
  } else if (roots == 3) {
    g.label = GaloisLabel::V4;
    g.order = 4;
  } else {
    IntForm lin;
    for (const auto& h : rf)
      if (form_degree(h) == 1) lin = h;
    const Rational r(-lin[0], lin[1]);
    const Rational ra(a), rb(b), rd(dd);
    bool cyclic = splits_over(r * r - Rational(4) * rd, delta) &&
                  splits_over(ra * ra - Rational(4) * (rb - r), delta);
    g.label = cyclic ? GaloisLabel::C4 : GaloisLabel::D4;
    g.order = cyclic ? 4 : 8;
  }
  return g;
}

QuarticGaloisGroup quartic_galois_group(const BinaryQuartic<Rational>& q) {
  if (discriminant(q).is_zero()) {
    throw DomainError("Galois group needs a squarefree quartic");
  }
  std::vector<IntForm> factors = factor_over_Q(primitive_integral(q));
  std::vector<int> degs;
  for (const auto& h : factors) degs.push_back(form_degree(h));
  std::sort(degs.begin(), degs.end());
  if (degs == std::vector<int>{4}) return irreducible_galois_group(factors.front());

  QuarticGaloisGroup g;
  g.factor_degrees = degs;
  if (degs == std::vector<int>{1, 1, 1, 1}) return g;
  if (degs == std::vector<int>{1, 1, 2}) {
    g.label = GaloisLabel::C2;
    g.order = 2;
    return g;
  }
  if (degs == std::vector<int>{2, 2}) {
    Rational d1 = small_discriminant(factors[0]), d2 = small_discriminant(factors[1]);
    if (is_rational_square(d1 * d2)) {
      g.label = GaloisLabel::C2;
      g.order = 2;
    } else {
      g.label = GaloisLabel::ReducibleComposite;
      g.order = 4;
    }
    return g;
  }
  // One linear and one irreducible cubic factor.
  for (const auto& h : factors) {
    if (form_degree(h) == 3) {
      g.label = GaloisLabel::ReducibleComposite;
      g.order = irreducible_galois_group(h).order;
    }
  }
  return g;
}

}  // namespace hmsl
