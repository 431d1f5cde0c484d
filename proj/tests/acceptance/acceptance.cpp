// Acceptance run: one PASS/FAIL line per criterion. Usage:
//   hmsl_acceptance <hmsl executable> <configs directory>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hmsl/errors.hpp"
#include "hmsl/io/json.hpp"
#include "hmsl/mpoly/galois.hpp"
#include "hmsl/mpoly/hensel.hpp"
#include "hmsl/search/identities.hpp"
#include "hmsl/surface/profile.hpp"
#include "support/galois_oracle.hpp"

using namespace hmsl;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

struct Run {
  int status = -1;
  std::string out;
  double seconds = 0;
};

Run run(const std::string& cmd) {
  Run r;
  auto t0 = Clock::now();
  FILE* f = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!f) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
  int st = pclose(f);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  r.seconds = seconds_since(t0);
  return r;
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

// Criteria 1-4 come from the reference identity suite.
Outcome identity_criterion(int criterion, const std::vector<IdentityCheck>& suite, double seconds) {
  Outcome o;
  int n = 0;
  for (const auto& c : suite) {
    if (c.criterion != criterion) continue;
    ++n;
    o.require(c.pass, c.name + ": " + c.detail);
  }
  o.require(n > 0, "no checks registered");
  o.detail << n << " exact checks";
  if (criterion == 1) {
    o.require(seconds < 5, "suite time");
    o.detail << ", suite " << seconds << " s";
  }
  return o;
}

Outcome galois_battery() {
  Outcome o;
  auto t0 = Clock::now();
  auto bat = oracle::battery();
  std::set<std::string> labels;
  int agree = 0;
  for (const auto& e : bat) {
    BinaryQuartic<Rational> q = quartic_from_form(e.form);
    QuarticGaloisGroup g = quartic_galois_group(q);
    auto [label, order] = oracle::infer(oracle::frobenius_types(q, 50), g.factor_degrees.size() == 1,
                                        g.factor_degrees);
    const bool ok = g.name() == e.label && g.order == e.order && label == e.label && order == e.order;
    agree += ok;
    o.require(ok, "battery entry " + q.str());
    labels.insert(e.label);
  }
  const double s = seconds_since(t0);
  o.require(bat.size() >= 40, "battery size");
  o.require(labels.size() == 8, "label coverage");
  o.require(s < 30, "time");
  o.detail << agree << "/" << bat.size() << " quartics agree, " << labels.size() << " labels, 50 primes each, " << s
           << " s";
  return o;
}

Outcome local_certificates() {
  Outcome o;
  using oracle::lin;
  using oracle::mul_all;
  auto q = [](const IntForm& f) { return quartic_from_form(f); };
  auto a = hensel_factor_quartic(q(mul_all({lin(1, 0), lin(1, -1), lin(1, -2), lin(1, -3)})), 5, 8);
  o.require(a.verdict == LocalVerdict::Unramified && a.roots.size() == 4 && a.residue_degree == 1,
            "t(t-u)(t-2u)(t-3u) at 5");
  auto b = hensel_factor_quartic(q(mul_all({IntForm{-18, 0, 1}, IntForm{-2, 0, 1}})), 3, 10);
  o.require(b.verdict == LocalVerdict::Unramified, "(t^2-18u^2)(t^2-2u^2) at 3");
  auto c = hensel_factor_quartic(q(mul_all({IntForm{-3, 0, 1}, IntForm{-2, 0, 1}})), 3, 10);
  o.require(c.verdict == LocalVerdict::Inconclusive, "(t^2-3u^2)(t^2-2u^2) at 3");

  auto e = [](long v) { return Valuation::exact(v); };
  auto o1 = ordinarity_from_valuations(e(0), e(0), e(0));
  o.require(o1.verdict == Verdict::Pass && *o1.v_u1 == 0 && *o1.v_u2 == 0, "valuations (0,0,0)");
  auto o2 = ordinarity_from_valuations(e(0), e(1), e(2));
  o.require(o2.verdict == Verdict::Fail && *o2.v_u1 == 4, "valuations (0,1,2)");
  auto o3 = ordinarity_from_valuations(e(0), e(1), e(1));
  o.require(o3.verdict == Verdict::Pass && *o3.v_u1 == -1 && *o3.v_u2 == 0, "valuations (0,1,1)");

  std::mt19937_64 rng(19);
  std::uniform_int_distribution<long> d(-200, 200);
  int points = 0, resolved = 0;
  for (int trial = 0; points < 100; ++trial) {
    std::vector<Integer> coords;
    bool all_zero = true;
    for (int i = 0; i < 6; ++i) {
      long x = d(rng) * (trial % 3 == 0 ? 5 : 1);
      all_zero = all_zero && x == 0;
      coords.emplace_back(x);
    }
    if (all_zero) continue;
    std::optional<Verdict> prev;
    for (long prec : {2L, 3L, 5L, 8L, 13L}) {
      auto ring = UnramifiedRing::make(5, 1, prec);
      std::vector<UnramifiedElt> pt;
      for (const auto& x : coords) pt.push_back(UnramifiedElt::from_integer(ring, x));
      Verdict v = ordinarity_certificate(sigma_profile(pt), prec).verdict;
      if (prev && *prev != Verdict::Indeterminate) o.require(v == *prev, "monotonicity");
      prev = v;
    }
    resolved += *prev != Verdict::Indeterminate;
    ++points;
  }
  o.detail << "3 Hensel examples, 3 valuation examples, " << points << " random 5-adic points monotone ("
           << resolved << " resolved)";
  return o;
}

Outcome end_to_end(const std::string& cli, const std::string& configs) {
  Outcome o;
  struct Demo {
    std::string file;
    std::function<bool(const Json&)> check;
    std::string expect;
  };
  const std::vector<Demo> demos = {
      {"rho0_demo.json",
       [](const Json& c) { return c.at("pass") == true && c.at("real_root_count") == 4; },
       "4 distinct real roots"},
      {"char3_demo.json",
       [](const Json& c) { return c.at("pass") == true && c.at("primes").at("3").at("verdict") == "unramified"; },
       "mod-3 unramified"},
  };
  for (const auto& demo : demos) {
    const std::string cmd = quote(cli) + " --json find-line --config " + quote(configs + "/" + demo.file);
    Run first = run(cmd), second = run(cmd);
    o.require(first.status == 0, demo.file + " exit status " + std::to_string(first.status));
    o.require(first.seconds < 60 && second.seconds < 60, demo.file + " time");
    o.require(first.out == second.out, demo.file + " byte-identical reruns");
    bool found = false;
    try {
      Json j = Json::parse(first.out);
      for (const Json& r : j.at("results")) found = found || demo.check(r.at("certificate"));
    } catch (const std::exception& e) {
      o.require(false, demo.file + " output: " + e.what());
    }
    o.require(found, demo.file + " " + demo.expect);
    o.detail << demo.file << ": " << (found ? demo.expect : "no certificate") << " in " << first.seconds << " s, "
             << (first.out == second.out ? "identical" : "different") << " rerun; ";
  }
  return o;
}

Outcome verify_paper(const std::string& cli) {
  Outcome o;
  Run r = run(quote(cli) + " --json verify-paper");
  o.require(r.status == 0, "exit status " + std::to_string(r.status));
  std::set<int> criteria;
  try {
    const Json j = Json::parse(r.out);
    for (const Json& c : j.at("checks")) criteria.insert(c.at("criterion").get<int>());
  } catch (const std::exception& e) {
    o.require(false, std::string("output: ") + e.what());
  }
  o.require(criteria == std::set<int>{1, 2, 3, 4}, "aggregates criteria 1-4");
  o.detail << "exit " << r.status << ", criteria " << criteria.size() << " of 4";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: " << argv[0] << " <hmsl executable> <configs directory>\n";
    return 2;
  }
  const std::string cli = argv[1], configs = argv[2];

  auto t0 = Clock::now();
  const std::vector<IdentityCheck> suite = reference_identity_suite();
  const double suite_seconds = seconds_since(t0);

  std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, [&] { return identity_criterion(1, suite, suite_seconds); }},
      {2, [&] { return identity_criterion(2, suite, suite_seconds); }},
      {3, [&] { return identity_criterion(3, suite, suite_seconds); }},
      {4, [&] { return identity_criterion(4, suite, suite_seconds); }},
      {5, galois_battery},
      {6, local_certificates},
      {7, [&] { return end_to_end(cli, configs); }},
      {8, [&] { return verify_paper(cli); }},
  };
  int failed = 0;
  for (auto& [n, f] : criteria) {
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail.str() << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
