#include "hmsl/mpoly/symmetric.hpp"

#include <string>

#include "hmsl/errors.hpp"

namespace hmsl {

SparsePoly<Rational> elementary_symmetric(int k, std::size_t n) {
  if (k < 1 || static_cast<std::size_t>(k) > n) {
    throw DomainError("elementary symmetric index " + std::to_string(k) +
                      " out of range 1.." + std::to_string(n));
  }
  SparsePoly<Rational> r(n);
  // Walk all n-bit masks with exactly k bits set.
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    if (__builtin_popcountl(mask) != k) continue;
    Exponent e(n, 0);
    for (std::size_t i = 0; i < n; ++i) e[i] = (mask >> i) & 1UL ? 1 : 0;
    r.add_term(std::move(e), Rational(1));
  }
  return r;
}

}  // namespace hmsl
