#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hmsl {

using Integer = mpz_class;

// Nonnegative residue of a modulo m (m > 0).
Integer mod(const Integer& a, const Integer& m);

// Residue in (-m/2, m/2].
Integer symmetric_mod(const Integer& a, const Integer& m);

Integer pow(const Integer& base, unsigned long exponent);
Integer pow(long base, unsigned long exponent);

// Exponent of p in n. n must be nonzero.
long valuation(const Integer& n, const Integer& p);

// Inverse of a modulo m; throws DomainError if gcd(a, m) != 1.
Integer inverse_mod(const Integer& a, const Integer& m);

bool is_perfect_square(const Integer& n);
Integer isqrt(const Integer& n);

bool is_prime(long n);

// Smallest odd prime strictly greater than n.
long next_prime(long n);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

std::string to_string(const Integer& n);

}  // namespace hmsl
