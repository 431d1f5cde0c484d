#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hmsl/io/json.hpp"
#include "hmsl/lines/char3.hpp"
#include "hmsl/lines/line.hpp"
#include "hmsl/mpoly/galois.hpp"
#include "hmsl/mpoly/hensel.hpp"
#include "hmsl/search/config.hpp"
#include "hmsl/surface/profile.hpp"

namespace hmsl {

inline constexpr const char* kCertificateSchema = "hmsl.certificate/1";

// Ordinarity data at one local point of L ∩ S.
struct PointOrdinarity {
  OrdinarityReport ordinarity;
  std::optional<bool> curve_v_avoided;  // nullopt: D vanishes to precision
};

struct PrimeReport {
  long p = 0;
  LocalFactorization local;
  std::vector<PointOrdinarity> points;  // only for an unramified verdict
  Verdict ordinarity = Verdict::Indeterminate;
  bool unramified() const { return local.verdict == LocalVerdict::Unramified; }
  bool curve_v_avoided() const;
};

// The record certify_line emits. `document` is the canonical JSON; the
// other fields are the parts callers branch on.
struct SolvableLineCertificate {
  Line<Rational> line;
  bool pass = false;
  std::vector<std::string> failures;
  std::map<std::string, bool> checks;
  int real_root_count = 0;
  std::optional<QuarticGaloisGroup> galois;
  std::map<long, PrimeReport> primes;
  std::optional<CuspReport> cusp;
  long precision = 0;
  Json document;

  std::string dump() const { return document.dump(2); }
};

// Full certification of a line of q1 = q2 = 0 at the config precision,
// doubling it on indeterminate p-adic data up to the config cap. Pure and
// single-threaded. Throws DomainError when the line is not on the quadrics
// and PrecisionError when the cap is reached.
SolvableLineCertificate certify_line(const Line<Rational>& l, const SearchContext& ctx);

// One attempt at a fixed precision; throws PrecisionError instead of
// retrying.
SolvableLineCertificate certify_line_at(const Line<Rational>& l, const SearchContext& ctx,
                                        long precision);

// Failure names, in the order they are reported.
const std::vector<std::string>& failure_names();

}  // namespace hmsl
