#pragma once

// Independent Galois oracle for binary quartics: a labelled battery and
// Frobenius cycle types sampled over many good primes. Shared by the unit
// and acceptance suites.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hmsl/exact/finite_field.hpp"
#include "hmsl/mpoly/binary_quartic.hpp"
#include "hmsl/mpoly/factor_modp.hpp"
#include "hmsl/mpoly/int_forms.hpp"

namespace hmsl::oracle {

inline IntForm mul_all(std::initializer_list<IntForm> fs) {
  IntForm r{1};
  for (const auto& f : fs) r = form_mul(r, f);
  return r;
}

inline IntForm lin(long a, long b) { return IntForm{Integer(b), Integer(a)}; }  // a t + b u

struct BatteryEntry {
  IntForm form;
  std::string label;
  int order;
};

inline std::vector<BatteryEntry> battery() {
  std::vector<BatteryEntry> b;
  // Irreducible quartics, coefficients from the constant term up; labels
  // from an independent Galois computation.
  const std::vector<std::pair<std::string, std::vector<std::vector<long>>>> irr = {
      {"V4", {{1, 0, 0, 0, 1}, {1, 0, -10, 0, 1}, {1, 0, 3, 0, 1}, {1, 0, -1, 0, 1}, {1, 3, 2, -3, 1}, {4, -4, 2, 2, 1}, {1, 0, 0, 0, 9}}},
      {"C4", {{1, 1, 1, 1, 1}, {5, 0, 5, 0, 1}, {2, 0, -4, 0, 1}, {2, 0, 4, 0, 1}, {5, 0, -5, 0, 1}, {1, 3, -1, -3, 1}, {1, 0, -5, 0, 5}}},
      {"S4", {{-1, -1, 0, 0, 1}, {1, 1, 1, 4, 1}, {-2, 4, -3, 4, 1}, {-1, -2, 1, 0, 1}, {-1, 1, 2, -4, 1}, {3, -1, 4, -2, 1}, {1, 1, 0, 0, 2}, {5, -3, 0, 4, 6}}},
      {"A4", {{12, 8, 0, 0, 1}, {1, 2, 3, -3, 1}, {1, 3, 3, -2, 1}, {2, 0, 2, -2, 1}, {2, -4, 2, 2, 1}, {3, -2, 2, -2, 1}}},
      {"D4", {{-2, 0, 0, 0, 1}, {3, -3, 0, 0, 1}, {1, 2, -2, 2, 1}, {-2, -4, 2, -4, 1}, {4, 2, 0, -1, 1}, {3, 1, 2, 2, 1}, {-1, 0, 0, 0, 3}}},
  };
  const std::map<std::string, int> order{{"V4", 4}, {"C4", 4}, {"S4", 24}, {"A4", 12}, {"D4", 8}};
  for (const auto& [label, forms] : irr) {
    for (const auto& c : forms) {
      IntForm f;
      for (long x : c) f.emplace_back(x);
      b.push_back({f, label, order.at(label)});
    }
  }
  // Reducible quartics with known structure.
  IntForm u{1, 0};
  b.push_back({mul_all({lin(1, 0), lin(1, -1), lin(1, -2), lin(1, -3)}), "C1", 1});
  b.push_back({mul_all({lin(1, 1), lin(1, -1), lin(1, 2), lin(1, -2)}), "C1", 1});
  b.push_back({mul_all({u, lin(1, 0), lin(1, -1), lin(1, 1)}), "C1", 1});
  b.push_back({mul_all({IntForm{-2, 0, 1}, lin(1, -1), u}), "C2", 2});
  b.push_back({mul_all({IntForm{1, 0, 1}, lin(1, -1), lin(1, 1)}), "C2", 2});
  b.push_back({mul_all({IntForm{-2, 0, 1}, IntForm{-8, 0, 1}}), "C2", 2});
  b.push_back({mul_all({IntForm{1, 0, 1}, IntForm{4, 0, 1}}), "C2", 2});
  b.push_back({mul_all({IntForm{-2, 0, 1}, IntForm{-3, 0, 1}}), "reducible-composite", 4});
  b.push_back({mul_all({IntForm{1, 0, 1}, IntForm{-2, 0, 1}}), "reducible-composite", 4});
  b.push_back({mul_all({IntForm{-2, 0, 0, 1}, lin(1, -1)}), "reducible-composite", 6});
  b.push_back({mul_all({IntForm{1, -3, 0, 1}, lin(1, 1)}), "reducible-composite", 3});
  return b;
}

// Cycle type of Frobenius at p from root counts over F_p and F_{p^2},
// computed as gcd degrees with x^(p^k) - x.
inline std::string cycle_type(const IntForm& f, long p) {
  Fq field = Fq::prime_field(p);
  FpPoly g = form_mod_p(f, field);
  FpPoly x(std::vector<FqElt>{FqElt(field, 0), FqElt(field, 1)}, FqElt(field, 0));
  FpPoly xp = pow_mod(x, Integer(p), g);
  int r1 = gcd(g, xp - x).degree();
  int r2 = gcd(g, pow_mod(xp, Integer(p), g) - x).degree();
  if (r1 == 4) return "1111";
  if (r1 == 2) return "211";
  if (r1 == 1) return "31";
  return r2 == 4 ? "22" : "4";
}

// Group inferred from the observed cycle types, using only the factor
// structure known by construction.
inline std::pair<std::string, int> infer(const std::set<std::string>& types, bool irreducible,
                                  const std::vector<int>& degs) {
  auto has = [&](const char* t) { return types.count(t) > 0; };
  if (irreducible) {
    if (has("31")) return has("4") || has("211") ? std::pair{"S4", 24} : std::pair{"A4", 12};
    if (has("4")) return has("211") ? std::pair{"D4", 8} : std::pair{"C4", 4};
    return {"V4", 4};
  }
  if (degs == std::vector<int>{1, 1, 1, 1}) return {"C1", 1};
  if (degs == std::vector<int>{1, 1, 2}) return {"C2", 2};
  if (degs == std::vector<int>{2, 2}) return has("211") ? std::pair{"reducible-composite", 4} : std::pair{"C2", 2};
  return {"reducible-composite", has("211") ? 6 : 3};
}

// Cycle types of Frobenius at the first `count` primes >= 7 of good
// reduction.
inline std::set<std::string> frobenius_types(const BinaryQuartic<Rational>& q, int count) {
  IntForm f = primitive_integral(q);
  Rational disc = discriminant(q);
  std::set<std::string> types;
  int used = 0;
  for (long p = 7; used < count; p = next_prime(p)) {
    if (valuation(disc, p) > 0) continue;
    // A root at [1:0] is moved to a finite place by u -> u + k t.
    IntForm h = f;
    for (long k = 1; h.back() == 0; ++k) {
      IntForm s(5, Integer(0));
      for (int i = 0; i <= 4; ++i) {
        // h_i t^i (u + k t)^(4-i)
        Integer term = f[static_cast<std::size_t>(i)];
        Integer binom(1);
        for (int j = 0; j <= 4 - i; ++j) {
          s[static_cast<std::size_t>(i + j)] += term * binom * pow(Integer(k), static_cast<unsigned long>(j));
          binom = binom * (4 - i - j) / (j + 1);
        }
      }
      h = s;
    }
    if (mod(h.back(), Integer(p)) == 0) continue;
    types.insert(cycle_type(h, p));
    ++used;
  }
  return types;
}

}  // namespace hmsl::oracle
