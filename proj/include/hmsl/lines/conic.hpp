#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hmsl/exact/integer.hpp"

namespace hmsl {

// Prime factors of |n| with multiplicity, ascending (trial division, then
// Pollard-Brent with probabilistic primality).
std::vector<Integer> factor_integer(const Integer& n);

// Some t with t^2 = a mod p for an odd prime p, or nullopt.
std::optional<Integer> sqrt_mod_prime(const Integer& a, const Integer& p);

// Some t with t^2 = a mod n for squarefree n > 0, or nullopt.
std::optional<Integer> sqrt_mod_squarefree(const Integer& a, const Integer& n);

// A nonzero integral solution of x^2 = a y^2 + b z^2 (a, b nonzero and
// squarefree) by Lagrange descent, or nullopt when the conic has no
// rational point.
std::optional<std::array<Integer, 3>> legendre_solve(const Integer& a, const Integer& b);

}  // namespace hmsl
