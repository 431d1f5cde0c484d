#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hmsl/search/certificate.hpp"
#include "hmsl/search/config.hpp"

namespace hmsl {

struct SearchResult {
  std::array<Rational, 3> parameters;
  long height = 0;
  SolvableLineCertificate certificate;
};

struct SearchStats {
  long candidates = 0;
  long last_height = 0;
  std::map<std::string, long> rejections;
  std::string stop;  // "max-results", "height-bound" or "candidate-budget"
};

struct SearchReport {
  std::vector<SearchResult> results;
  SearchStats stats;
};

// Called for each certified line in stream order; return false to stop.
using ResultCallback = std::function<bool(const SearchResult&)>;

// Enumerates chart parameters meeting the congruence targets by increasing
// height (ties: real distance, then an rng_seed-keyed order), rejects
// candidates with a counted reason, and yields certified lines. Candidates
// are evaluated on `threads` workers (0: the config value) and merged in
// enumeration order, so the stream does not depend on the worker count.
SearchReport search_lines(const SearchContext& ctx, long max_results, const ResultCallback& on_result = {},
                          unsigned threads = 0);

// As search_lines, but an empty stream is an error: PrecisionError when some
// candidate ran out of precision, SearchExhausted otherwise. The message
// carries the rejection statistics.
std::vector<SearchResult> find_lines(const SearchContext& ctx, long max_results);

std::string stats_summary(const SearchStats& s);
Json to_json(const SearchStats& s);
Json to_json(const SearchResult& r);
Json to_json(const SearchReport& r);

}  // namespace hmsl
