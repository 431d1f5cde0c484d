#pragma once

#include <vector>

#include "hmsl/errors.hpp"
#include "hmsl/exact/scalar.hpp"
#include "hmsl/mpoly/sparse_poly.hpp"

namespace hmsl {

// f(t*P + u*Q) as a form in (t, u). Coefficients of f are embedded into the
// ring of the points.
template <class R, class S>
SparsePoly<S> restrict_to_points(const SparsePoly<R>& f, const std::vector<S>& p,
                                 const std::vector<S>& q) {
  if (p.size() != f.nvars() || q.size() != f.nvars()) {
    throw DomainError("line points have the wrong number of coordinates");
  }
  if (p.empty()) throw DomainError("empty line points");
  std::vector<SparsePoly<S>> forms;
  for (std::size_t i = 0; i < p.size(); ++i) {
    SparsePoly<S> g(2);
    g.add_term({1, 0}, p[i]);
    g.add_term({0, 1}, q[i]);
    forms.push_back(std::move(g));
  }
  return f.substitute(forms, p.front());
}

}  // namespace hmsl
