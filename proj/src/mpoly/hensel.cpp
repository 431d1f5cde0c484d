#include "hmsl/mpoly/hensel.hpp"

#include <algorithm>
#include <numeric>

#include "hmsl/errors.hpp"

namespace hmsl {

std::string to_string(LocalVerdict v) {
  return v == LocalVerdict::Unramified ? "unramified" : "inconclusive";
}

std::string to_string(BlockKind k) {
  switch (k) {
    case BlockKind::Squarefree: return "squarefree";
    case BlockKind::RepeatedQuadratic: return "repeated-quadratic";
    case BlockKind::Higher: return "higher";
  }
  return "?";
}

namespace {

std::string power(const char* v, int k) {
  if (k == 0) return "";
  return k == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(k);
}

}  // namespace

std::string ModPFactor::str() const {
  std::string s;
  if (at_infinity) {
    s = "u";
  } else {
    for (int i = degree; i >= 0; --i) {
      long c = coeffs[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      std::string mono = power("t", i) + power("u", degree - i);
      if (!s.empty()) s += "+";
      s += (c == 1 && !mono.empty()) ? mono : std::to_string(c) + mono;
    }
    s = "(" + s + ")";
  }
  if (multiplicity > 1) s += "^" + std::to_string(multiplicity);
  return s;
}

std::string LocalFactorization::pattern() const {
  std::vector<std::pair<int, int>> parts;
  for (const auto& f : mod_p) parts.emplace_back(f.degree, f.multiplicity);
  std::sort(parts.begin(), parts.end());
  std::string s;
  for (const auto& [d, m] : parts) {
    if (!s.empty()) s += " ";
    s += std::to_string(d);
    if (m > 1) s += "^" + std::to_string(m);
  }
  return s;
}

UnramifiedElt evaluate_form(const IntForm& f, const UnramifiedElt& t, const UnramifiedElt& u) {
  const auto& ring = t.ring();
  UnramifiedElt acc(ring);
  const int d = form_degree(f);
  std::vector<UnramifiedElt> tp{UnramifiedElt::from_integer(ring, 1)}, up{tp.front()};
  for (int i = 1; i <= d; ++i) {
    tp.push_back(tp.back() * t);
    up.push_back(up.back() * u);
  }
  for (int i = 0; i <= d; ++i) {
    acc += UnramifiedElt::from_integer(ring, f[static_cast<std::size_t>(i)]) *
           tp[static_cast<std::size_t>(i)] * up[static_cast<std::size_t>(d - i)];
  }
  return acc;
}

namespace {

// Derivative in t of f(t, 1), or in y of f(1, y) when `swap`.
IntForm chart_poly(const IntForm& f, bool swap) {
  if (!swap) return f;
  return IntForm(f.rbegin(), f.rend());
}

UnramifiedElt eval_poly(const IntForm& c, const UnramifiedElt& x) {
  UnramifiedElt acc(x.ring());
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + UnramifiedElt::from_integer(x.ring(), c[i]);
  return acc;
}

IntForm derivative_poly(const IntForm& c) {
  IntForm d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<long>(i));
  if (d.empty()) d.push_back(Integer(0));
  return d;
}

// Newton iteration for a simple root of the polynomial c (low to high)
// starting from a residue approximation.
UnramifiedElt newton(const IntForm& c, UnramifiedElt x) {
  const IntForm dc = derivative_poly(c);
  const long n = x.ring()->precision();
  for (long acc = 1; acc < 2 * n + 2; acc *= 2) {
    UnramifiedElt fx = eval_poly(c, x);
    if (fx.is_zero()) break;
    x = x - fx * eval_poly(dc, x).inverse();
  }
  return x;
}

// Square root of a unit that is a square in the residue field.
std::optional<UnramifiedElt> unit_sqrt(const UnramifiedElt& a) {
  const auto& ring = a.ring();
  auto residue_ring = ring->with_precision(1);
  UnramifiedElt ar = a.reduce(1);
  for (const auto& y : UnramifiedElt::residue_elements(residue_ring)) {
    if (!(y * y == ar)) continue;
    if (y.is_zero()) return std::nullopt;
    UnramifiedElt x = y.lift(ring->precision());
    const UnramifiedElt half = UnramifiedElt::from_integer(ring, 2).inverse();
    for (long acc = 1; acc < 2 * ring->precision() + 2; acc *= 2) x = (x + a * x.inverse()) * half;
    return x;
  }
  return std::nullopt;
}

bool residue_is_square(const Integer& unit, long p) {
  return mpz_legendre(unit.get_mpz_t(), Integer(p).get_mpz_t()) == 1;
}

// Divides (t, u) by the largest common power of p.
LocalRoot make_primitive(LocalRoot r) {
  Valuation vt = r[0].valuation(), vu = r[1].valuation();
  long k = std::min(vt.value, vu.value);
  if (!vt.certified && !vu.certified) {
    throw PrecisionError("root coordinates vanish to working precision",
                         r[0].ring()->precision() + 1);
  }
  if (k > 0) {
    r[0] = r[0].divide_by_p_power(k);
    r[1] = r[1].divide_by_p_power(k);
  }
  return r;
}

std::vector<LocalRoot> squarefree_block_roots(const IntForm& block, UnramifiedRingPtr ring) {
  std::vector<LocalRoot> roots;
  const long n = ring->precision();
  auto residue_ring = ring->with_precision(1);
  const UnramifiedElt one = UnramifiedElt::from_integer(ring, 1);
  const UnramifiedElt zero(ring);
  const long d = form_degree(block);
  const long p = ring->prime();
  if (mod(block.back(), Integer(p)) == 0) {
    // [1:0] is a residue root: work in the chart t = 1.
    UnramifiedElt y = newton(chart_poly(block, true), zero);
    roots.push_back({one, y});
  }
  for (const auto& x0 : UnramifiedElt::residue_elements(residue_ring)) {
    if (!eval_poly(block, x0).is_zero()) continue;
    UnramifiedElt x = newton(block, x0.lift(n));
    roots.push_back({x, one});
  }
  if (static_cast<long>(roots.size()) != d) {
    throw DomainError("squarefree block did not split in the chosen extension");
  }
  return roots;
}

std::vector<LocalRoot> quadratic_block_roots(const IntForm& block, long k, UnramifiedRingPtr ring) {
  const Integer &c = block[0], &b = block[1], &a = block[2];
  auto el = [&](const Integer& x) { return UnramifiedElt::from_integer(ring, x); };
  const Integer disc = b * b - 4 * a * c;
  const Integer pk = pow(Integer(ring->prime()), static_cast<unsigned long>(k));
  const Integer unit = disc / (pk * pk);
  auto s0 = unit_sqrt(el(unit));
  if (!s0) throw DomainError("discriminant unit is not a square in the extension");
  UnramifiedElt s = *s0 * el(pk);
  std::vector<LocalRoot> roots;
  const long p = ring->prime();
  // A zero coefficient counts as valuation at least the working precision.
  auto v = [&](const Integer& x) {
    return x == 0 ? ring->precision() : valuation(x, Integer(p));
  };
  if (v(a) <= v(c)) {
    roots.push_back({-el(b) + s, el(2 * a)});
    roots.push_back({-el(b) - s, el(2 * a)});
  } else {
    roots.push_back({el(2 * c), -el(b) - s});
    roots.push_back({el(2 * c), -el(b) + s});
  }
  // The square root carries only N - k reliable digits.
  for (auto& r : roots) {
    long keep = ring->precision() - k;
    r = {r[0].reduce(keep), r[1].reduce(keep)};
  }
  return roots;
}

}  // namespace

LocalFactorization hensel_factor_quartic(const BinaryQuartic<Rational>& q, long p, long precision) {
  if (p < 3 || !is_prime(p)) throw DomainError("local analysis needs an odd prime");
  if (precision < 2) throw DomainError("p-adic precision must be at least 2");
  if (discriminant(q).is_zero()) throw DomainError("local analysis needs a squarefree quartic");
  LocalFactorization rep;
  rep.p = p;
  rep.precision = precision;
  rep.form = primitive_integral(q);
  const Fq field = Fq::prime_field(p);
  FpPoly red = form_mod_p(rep.form, field);
  const int inf_mult = 4 - red.degree();

  std::vector<FpFactor> fac = factor_mod_p(red);
  for (const auto& f : fac) {
    ModPFactor m;
    for (const auto& x : f.poly.coeffs()) m.coeffs.push_back(x.c0());
    m.degree = f.poly.degree();
    m.multiplicity = f.multiplicity;
    rep.mod_p.push_back(m);
  }
  if (inf_mult > 0) rep.mod_p.push_back({{1}, 1, inf_mult, true});
  rep.squarefree_mod_p = true;
  for (const auto& m : rep.mod_p)
    if (m.multiplicity > 1) rep.squarefree_mod_p = false;

  // Coprime blocks: all simple factors together, then each repeated one.
  const FpPoly one_poly(std::vector<FqElt>{FqElt(field, 1)}, FqElt(field, 0));
  std::vector<FpFormFactor> blocks;
  std::vector<BlockKind> kinds;
  std::vector<int> fdeg;
  FpFormFactor simple{one_poly, 0};
  int simple_lcm = 1;
  for (std::size_t i = 0; i < fac.size(); ++i) {
    const auto& m = rep.mod_p[i];
    if (m.multiplicity == 1) {
      simple.poly = simple.poly * fac[i].poly;
      simple.degree += m.degree;
      simple_lcm = std::lcm(simple_lcm, m.degree);
    }
  }
  if (inf_mult == 1) simple.degree += 1;
  if (simple.degree > 0) {
    blocks.push_back(simple);
    kinds.push_back(BlockKind::Squarefree);
    fdeg.push_back(simple_lcm);
  }
  for (std::size_t i = 0; i < fac.size(); ++i) {
    const auto& m = rep.mod_p[i];
    if (m.multiplicity == 1) continue;
    FpPoly g = one_poly;
    for (int k = 0; k < m.multiplicity; ++k) g = g * fac[i].poly;
    blocks.push_back({g, m.degree * m.multiplicity});
    kinds.push_back(m.degree == 1 && m.multiplicity == 2 ? BlockKind::RepeatedQuadratic
                                                          : BlockKind::Higher);
    fdeg.push_back(m.degree);
  }
  if (inf_mult >= 2) {
    blocks.push_back({one_poly, inf_mult});
    kinds.push_back(inf_mult == 2 ? BlockKind::RepeatedQuadratic : BlockKind::Higher);
    fdeg.push_back(1);
  }

  std::vector<IntForm> lifted = hensel_lift_forms(rep.form, blocks, p, precision);
  const Integer pn = pow(Integer(p), static_cast<unsigned long>(precision));
  rep.verdict = LocalVerdict::Unramified;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    LocalBlock b;
    b.kind = kinds[i];
    b.form = lifted[i];
    b.residue_degree = fdeg[i];
    if (b.kind == BlockKind::Squarefree) {
      b.verdict = LocalVerdict::Unramified;
    } else if (b.kind == BlockKind::RepeatedQuadratic) {
      const Integer disc = mod(b.form[1] * b.form[1] - 4 * b.form[0] * b.form[2], pn);
      if (disc == 0) {
        throw PrecisionError("quadratic block discriminant vanishes modulo " + std::to_string(p) +
                                 "^" + std::to_string(precision),
                             2 * precision);
      }
      long v = valuation(disc, Integer(p));
      b.disc_valuation = Valuation::exact(v);
      if (v % 2 == 0) {
        b.verdict = LocalVerdict::Unramified;
        Integer unit = disc / pow(Integer(p), static_cast<unsigned long>(v));
        b.residue_degree = residue_is_square(unit, p) ? 1 : 2;
        if (v / 2 >= precision - 1) {
          throw PrecisionError("too few digits left to separate the block roots", 2 * precision);
        }
      }
    }
    if (b.verdict != LocalVerdict::Unramified) rep.verdict = LocalVerdict::Inconclusive;
    rep.blocks.push_back(std::move(b));
  }
  if (rep.verdict != LocalVerdict::Unramified) return rep;

  int f = 1;
  for (const auto& b : rep.blocks) f = std::lcm(f, b.residue_degree);
  rep.residue_degree = f;
  auto ring = UnramifiedRing::make(p, f, precision);
  for (const auto& b : rep.blocks) {
    std::vector<LocalRoot> r;
    if (b.kind == BlockKind::Squarefree) {
      r = squarefree_block_roots(b.form, ring);
    } else {
      r = quadratic_block_roots(b.form, b.disc_valuation->value / 2, ring);
    }
    for (auto& x : r) rep.roots.push_back(make_primitive(x));
  }
  return rep;
}

}  // namespace hmsl
