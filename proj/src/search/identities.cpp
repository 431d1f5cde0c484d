#include "hmsl/search/identities.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "hmsl/exact/finite_field.hpp"
#include "hmsl/lines/char3.hpp"
#include "hmsl/lines/line.hpp"
#include "hmsl/mpoly/fq_roots.hpp"
#include "hmsl/mpoly/real_roots.hpp"
#include "hmsl/mpoly/symmetric.hpp"
#include "hmsl/search/config.hpp"
#include "hmsl/surface/profile.hpp"
#include "hmsl/surface/twist.hpp"

namespace hmsl {

namespace {

RPoly var(std::size_t i, std::size_t n = 6) { return RPoly::variable(n, i, Rational(1)); }

// Runs a check, turning exceptions into a failure with the message.
IdentityCheck run(int criterion, std::string name, const std::function<std::string(bool&)>& body) {
  IdentityCheck c{criterion, std::move(name), false, ""};
  try {
    c.detail = body(c.pass);
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail = std::string("exception: ") + e.what();
  }
  return c;
}

std::string show(const std::vector<long>& v) {
  std::string s;
  for (long x : v) s += (s.empty() ? "" : ", ") + std::to_string(x);
  return "(" + s + ")";
}

}  // namespace

bool all_pass(const std::vector<IdentityCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
}

std::vector<IdentityCheck> reference_identity_suite() {
  std::vector<IdentityCheck> out;
  const SurfaceModel c3 = twisted_equations(char3_twist(1, 1));
  const SurfaceModel r0 = twisted_equations(rho0_twist());

  out.push_back(run(1, "sigma_1 in x-coordinates is x4 + x5", [&](bool& ok) {
    ok = c3.sigma[1] == var(4) + var(5);
    return c3.sigma[1].str(c3.names());
  }));
  out.push_back(run(1, "3 sigma_2 in x-coordinates is x4^2 + x5^2 - x0 x1 - x2 x3 + 3 x4 x5", [&](bool& ok) {
    RPoly want = var(4) * var(4) + var(5) * var(5) - var(0) * var(1) - var(2) * var(3) +
                 (var(4) * var(5)).scaled(Rational(3));
    RPoly got = c3.sigma[2].scaled(Rational(3));
    ok = got == want;
    return got.str(c3.names());
  }));
  out.push_back(run(1, "L_{a,b,c} lies on Q1 and Q2 for symbolic a, b, c", [&](bool& ok) {
    auto v = [](std::size_t i) { return var(i, 5); };
    auto [p, q] = labc_points(v(0), v(1), v(2), RPoly(5), RPoly::constant(5, Rational(1)));
    std::vector<RPoly> forms;
    for (std::size_t i = 0; i < 6; ++i) forms.push_back(p[i] * v(3) + q[i] * v(4));
    ok = c3.q1.substitute(forms, Rational(1)).is_zero() && c3.q2.substitute(forms, Rational(1)).is_zero();
    return std::string("both restrictions are the zero polynomial in (a, b, c, t, u)");
  }));
  out.push_back(run(1, "Q4 restricted to L_{0,0,0} vanishes for several lambda", [&](bool& ok) {
    ok = true;
    for (auto [l1, l2] : {std::pair{Rational(1), Rational(1)}, std::pair{Rational(2), Rational(3, 5)},
                          std::pair{Rational(-7, 2), Rational(9)}}) {
      SurfaceModel m = twisted_equations(char3_twist(l1, l2));
      ok = ok && quartic_of_line(labc_line(Rational(0), Rational(0), Rational(0), m), m).degenerate;
    }
    return std::string("lambda in {(1, 1), (2, 3/5), (-7/2, 9)}");
  }));
  out.push_back(run(1, "archimedean twist equations have rational coefficients", [&](bool& ok) {
    const TwistData tw = rho0_twist();
    std::vector<SparsePoly<Cyclo>> forms;
    for (std::size_t i = 0; i < 6; ++i) {
      SparsePoly<Cyclo> f(6);
      for (std::size_t j = 0; j < 6; ++j) {
        Exponent e(6, 0);
        e[j] = 1;
        f.add_term(e, tw.matrix(i, j));
      }
      forms.push_back(f);
    }
    ok = true;
    for (int k = 1; k <= 6; ++k) {
      SparsePoly<Cyclo> s = elementary_symmetric(k).map_coeffs([](const Rational& x) { return Cyclo(x); });
      SparsePoly<Cyclo> tk = s.substitute(forms, Cyclo(1));
      ok = ok && is_conjugation_stable(tk);
      for (const auto& [e, c] : tk.terms()) ok = ok && c.is_rational();
    }
    return std::string("sigma_1..sigma_6 composed with the twist matrix");
  }));
  out.push_back(run(1, "u1 and u2 are invariant under scaling", [&](bool& ok) {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> d(-9, 9);
    auto u1 = [](const SigmaProfile<Rational>& s) { return pow(s.sigma(5), -6) * pow(s.d, 5); };
    auto u2 = [](const SigmaProfile<Rational>& s) {
      return pow(s.sigma(5), -3) * s.sigma(3).inverse() * pow(s.d, 3);
    };
    ok = true;
    int done = 0;
    while (done < 40) {
      std::vector<Rational> pt;
      for (int i = 0; i < 6; ++i) pt.emplace_back(d(rng));
      auto p = sigma_profile(pt);
      Rational mu(Integer(d(rng)), Integer(1 + std::abs(d(rng))));
      if (p.sigma(5).is_zero() || p.sigma(3).is_zero() || mu.is_zero()) continue;
      std::vector<Rational> scaled;
      for (const auto& x : pt) scaled.push_back(mu * x);
      auto q = sigma_profile(scaled);
      ok = ok && u1(p) == u1(q) && u2(p) == u2(q);
      ++done;
    }
    return std::to_string(done) + " random points and scalars";
  }));
  out.push_back(run(1, "phi2^3/chi6 = -27 u2 and phi2^5/chi10 = 729 u1", [&](bool& ok) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-40, 40);
    ok = true;
    int done = 0;
    for (int i = 0; i < 200 && done < 100; ++i) {
      auto p = make_profile<Rational>({Rational(0), Rational(0), Rational(d(rng)), Rational(0), Rational(d(rng)),
                                       Rational(d(rng))});
      if (p.sigma(5).is_zero() || p.sigma(3).is_zero()) continue;
      auto v = modular_form_values(p);
      Rational u1 = pow(p.sigma(5), -6) * pow(p.d, 5);
      Rational u2 = pow(p.sigma(5), -3) * p.sigma(3).inverse() * pow(p.d, 3);
      ok = ok && v.phi2_cubed_over_chi6 && *v.phi2_cubed_over_chi6 == Rational(-27) * u2 &&
           v.phi2_fifth_over_chi10 == Rational(729) * u1;
      ++done;
    }
    return std::to_string(done) + " random sigma profiles";
  }));

  const Line<Rational> real_line = reference_real_line();
  out.push_back(run(2, "sigma_1 and sigma_2 vanish along the real reference line", [&](bool& ok) {
    ok = lies_in(real_line, r0.sigma[1]) && lies_in(real_line, r0.sigma[2]);
    return std::string("restrictions to t P + u Q are identically zero");
  }));
  out.push_back(run(2, "the real reference line meets sigma_4 = 0 in 4 distinct real points", [&](bool& ok) {
    LineQuartic<Rational> lq = quartic_of_line(real_line, r0);
    const int n = real_root_count(lq.quartic);
    ok = !lq.degenerate && !discriminant(lq.quartic).is_zero() && n == 4;
    return "Sturm count " + std::to_string(n);
  }));

  out.push_back(run(3, "sigma_4 on the F25 line is -3t(8u^3 - t^3) with 4 roots in P^1(F25)", [&](bool& ok) {
    const SurfaceModel id = twisted_equations(identity_twist());
    const Fq f25 = Fq::quadratic(5);
    const FqElt like(f25, 0);
    const Cyclo w = Cyclo::sqrt_minus3();
    auto pt = [&](std::vector<Cyclo> v) {
      std::vector<FqElt> x;
      for (const auto& c : v) x.push_back(embed(c, like));
      return x;
    };
    auto p = pt({Cyclo(1) - w, Cyclo(1) + w, -1, -1, 1, -1});
    auto q = pt({0, 0, Cyclo(1) + w, Cyclo(1) - w, 0, -2});
    LineQuartic<FqElt> lq = quartic_of_points(id, p, q);
    // -3t(8u^3 - t^3) = 3t^4 - 24 t u^3.
    const std::array<FqElt, 5> want{FqElt(f25, 0), FqElt(f25, -24), FqElt(f25, 0), FqElt(f25, 0), FqElt(f25, 3)};
    ok = lq.quartic.c == want;
    const auto roots = roots_over_Fq(lq.quartic, f25);
    int brute = 0;
    for (const auto& t : FqElt::elements(f25))
      if (lq.quartic(t, FqElt(f25, 1)).is_zero()) ++brute;
    if (lq.quartic(FqElt(f25, 1), FqElt(f25, 0)).is_zero()) ++brute;
    ok = ok && roots.size() == 4 && brute == 4;
    return std::to_string(roots.size()) + " roots, brute-force scan of 26 points finds " + std::to_string(brute);
  }));

  out.push_back(run(4, "char-3 leading profile valuations at (alpha, beta, gamma) = (5, 40, 41)", [&](bool& ok) {
    Char3Profile prof = char3_leading_profile(1, 1);
    ProfileValuations v = check_leading_profile(prof, 5, 40, 41);
    // v(P0) = gamma, v(P1) = beta, v(P2) = 1 + 2 alpha, v(P3) = gamma, v(P4) = beta.
    const std::array<long, 5> want{41, 40, 11, 41, 40};
    ok = v.actual == want && v.expected == want;
    return "v(P0..P4) = " + show({v.actual.begin(), v.actual.end()});
  }));
  out.push_back(run(4, "parity rule truth table", [&](bool& ok) {
    ok = true;
    int accepted = 0;
    for (int mask = 0; mask < 16; ++mask) {
      const long ob = mask & 1, oc = (mask >> 1) & 1, l1 = (mask >> 2) & 1, l2 = (mask >> 3) & 1;
      const bool expect = (ob == l1) && (oc == l2);
      ok = ok && parity_admissible(ob, oc, l1, l2) == expect;
      accepted += parity_admissible(ob, oc, l1, l2);
    }
    ok = ok && accepted == 4;
    return std::to_string(accepted) + " of 16 parity classes accepted";
  }));
  return out;
}

}  // namespace hmsl
