#include "hmsl/mpoly/fq_roots.hpp"

#include "hmsl/errors.hpp"
#include "hmsl/mpoly/dense_poly.hpp"

namespace hmsl {

FqElt change_field(const FqElt& x, const Fq& target) {
  if (x.field() == target) return x;
  if (x.field().p != target.p) throw DomainError("fields of different characteristic");
  if (x.field().degree == 2 && x.c1() != 0) {
    if (target.degree == 1) throw DomainError("element does not lie in F_p");
    if (x.field().nonresidue != target.nonresidue) throw DomainError("incompatible F_p^2 bases");
  }
  return FqElt(target, x.c0(), target.degree == 2 ? x.c1() : 0);
}

BinaryQuartic<FqElt> reduce_quartic(const BinaryQuartic<Rational>& q, const Fq& field) {
  return q.map([&](const Rational& x) { return FqElt::from_rational(field, x); });
}

std::vector<FqRoot> roots_over_Fq(const BinaryQuartic<FqElt>& q, const Fq& field) {
  BinaryQuartic<FqElt> f = q.map([&](const FqElt& x) { return change_field(x, field); });
  if (f.degenerate()) throw DomainError("zero form vanishes on all of P^1");
  const FqElt zero(field, 0), one(field, 1);
  std::vector<FqRoot> roots;
  // [1:0] is a root of multiplicity equal to the number of vanishing top
  // coefficients.
  int top = 0;
  while (top <= 4 && f.c[static_cast<std::size_t>(4 - top)].is_zero()) ++top;
  if (top > 0) roots.push_back({one, zero, top});

  DensePoly<FqElt> g = f.affine();
  for (const FqElt& x : FqElt::elements(field)) {
    if (!g(x).is_zero()) continue;
    DensePoly<FqElt> lin(std::vector<FqElt>{-x, one}, zero);
    int m = 0;
    for (;;) {
      auto [quo, rem] = g.divmod(lin);
      if (!rem.is_zero()) break;
      g = quo;
      ++m;
    }
    roots.push_back({x, one, m});
  }
  return roots;
}

}  // namespace hmsl
