#include "hmsl/search/solvability.hpp"

#include "hmsl/errors.hpp"

namespace hmsl {

SolvabilityReport solvability_report(const BinaryQuartic<Rational>& q) {
  if (q.degenerate()) throw DomainError("the zero form has no splitting field");
  if (discriminant(q).is_zero()) throw DomainError("solvability report needs a squarefree quartic");
  SolvabilityReport r;
  r.group = quartic_galois_group(q);
  for (const IntForm& f : factor_over_Q(primitive_integral(q))) {
    QuarticGaloisGroup g = irreducible_galois_group(f);
    SolvabilityFactor s{f, form_degree(f), g.name(), g.order};
    if (s.degree == 1) s.group = "C1";
    if (s.degree == 3) s.group = g.order == 3 ? "C3" : "S3";
    r.factors.push_back(std::move(s));
  }
  return r;
}

}  // namespace hmsl
