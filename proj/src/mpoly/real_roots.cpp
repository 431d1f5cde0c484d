#include "hmsl/mpoly/real_roots.hpp"

#include <vector>

#include "hmsl/errors.hpp"

namespace hmsl {
namespace {

using Poly = DensePoly<Rational>;

std::vector<Poly> sturm_sequence(const Poly& f) {
  std::vector<Poly> seq{f, f.derivative()};
  while (!seq.back().is_zero()) {
    Poly r = seq[seq.size() - 2] % seq.back();
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int sign_at_infinity(const Poly& p, bool negative) {
  if (p.is_zero()) return 0;
  int s = p.leading().sign();
  return negative && (p.degree() % 2 == 1) ? -s : s;
}

}  // namespace

int sturm_root_count(const DensePoly<Rational>& f) {
  if (f.is_zero()) throw DomainError("root count of the zero polynomial");
  if (f.degree() == 0) return 0;
  std::vector<Poly> seq = sturm_sequence(f);
  std::vector<int> lo, hi;
  for (const Poly& p : seq) {
    lo.push_back(sign_at_infinity(p, true));
    hi.push_back(sign_at_infinity(p, false));
  }
  return sign_changes(lo) - sign_changes(hi);
}

int sturm_count_in(const DensePoly<Rational>& f, const Rational& lo, const Rational& hi) {
  if (f.is_zero()) throw DomainError("root count of the zero polynomial");
  if (f.degree() == 0) return 0;
  std::vector<Poly> seq = sturm_sequence(f);
  std::vector<int> a, b;
  for (const Poly& p : seq) {
    a.push_back(p(lo).sign());
    b.push_back(p(hi).sign());
  }
  return sign_changes(a) - sign_changes(b);
}

int real_root_count(const BinaryQuartic<Rational>& q) {
  if (discriminant(q).is_zero()) {
    throw DomainError("real root count needs a squarefree quartic");
  }
  Poly f = q.affine();
  int at_infinity = q.c[4].is_zero() ? 1 : 0;
  return sturm_root_count(f) + at_infinity;
}

}  // namespace hmsl
