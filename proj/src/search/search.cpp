#include "hmsl/search/search.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "hmsl/mpoly/real_roots.hpp"

namespace hmsl {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t tiebreak(std::uint64_t seed, const ParameterPoint& p) {
  std::uint64_t h = splitmix(seed);
  h = splitmix(h ^ static_cast<std::uint64_t>(p.d));
  for (long n : p.n) h = splitmix(h ^ static_cast<std::uint64_t>(n));
  return h;
}

struct Candidate {
  ParameterPoint point;
  Rational distance2;
  std::uint64_t key = 0;
};

struct Outcome {
  std::string rejection;  // empty when certified
  std::optional<SolvableLineCertificate> certificate;
};

std::optional<long> ord3(const Rational& x) {
  if (x.is_zero()) return std::nullopt;
  return valuation(x.numerator(), Integer(3)) - valuation(x.denominator(), Integer(3));
}

// Cheap rejections first, then full certification. The reason is the first
// failure in certificate order.
Outcome evaluate(const SearchContext& ctx, const std::array<Rational, 3>& abc) {
  const SurfaceModel& m = ctx.model();
  Line<Rational> l;
  try {
    l = ctx.chart().line(abc);
  } catch (const DomainError&) {
    return {"chart-degenerate", std::nullopt};
  }
  LineQuartic<Rational> lq = integral_quartic_of_line(l, m);
  if (lq.degenerate) return {"degenerate-quartic", std::nullopt};
  if (discriminant(lq.quartic).is_zero()) return {"non-squarefree", std::nullopt};
  if (ctx.char3_profile()) {
    auto oa = ord3(abc[0]), ob = ord3(abc[1]), oc = ord3(abc[2]);
    auto l1 = ord3(ctx.config().lambda1), l2 = ord3(ctx.config().lambda2);
    // Inside the separated regime the parity rule decides the mod-3 verdict.
    if (oa && ob && oc && *oa >= 1 && *ob >= 1 && *oc >= 1 &&
        !discriminant_parity_admissible(*ob, *oc, *l1, *l2) &&
        profile_valuations(*ctx.char3_profile(), *oa, *ob, *oc).separated())
      return {"parity", std::nullopt};
  }
  if (real_root_count(lq.quartic) != 4) return {"real-roots", std::nullopt};
  try {
    SolvableLineCertificate cert = certify_line(l, ctx);
    if (!cert.pass) return {cert.failures.front(), std::nullopt};
    return {"", std::move(cert)};
  } catch (const PrecisionError&) {
    return {"precision", std::nullopt};
  }
}

std::vector<Outcome> evaluate_batch(const SearchContext& ctx, const std::vector<Candidate>& batch,
                                    unsigned threads) {
  std::vector<Outcome> out(batch.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < batch.size(); i = next++) out[i] = evaluate(ctx, batch[i].point.value());
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(batch.size())));
  if (n == 1) {
    work();
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace

SearchReport search_lines(const SearchContext& ctx, long max_results, const ResultCallback& on_result,
                          unsigned threads) {
  const SearchConfig& cfg = ctx.config();
  if (threads == 0) threads = cfg.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  SearchReport rep;
  SearchStats& st = rep.stats;
  ParameterLattice lattice(ctx.parameter_targets());
  const std::size_t batch_size = std::max<std::size_t>(32, 8 * static_cast<std::size_t>(threads));

  for (long h = 1; h <= cfg.height_bound; ++h) {
    st.last_height = h;
    std::vector<Candidate> round;
    for (const ParameterPoint& p : lattice.points_of_height(h))
      round.push_back({p, lattice.distance2(p.value()), tiebreak(cfg.rng_seed, p)});
    std::sort(round.begin(), round.end(), [](const Candidate& a, const Candidate& b) {
      if (a.distance2 != b.distance2) return a.distance2 < b.distance2;
      if (a.key != b.key) return a.key < b.key;
      return std::tie(a.point.d, a.point.n) < std::tie(b.point.d, b.point.n);
    });
    for (std::size_t start = 0; start < round.size(); start += batch_size) {
      const std::size_t room = static_cast<std::size_t>(cfg.max_candidates - st.candidates);
      std::vector<Candidate> batch(round.begin() + static_cast<long>(start),
                                   round.begin() + static_cast<long>(std::min({round.size(), start + batch_size,
                                                                               start + room})));
      std::vector<Outcome> outs = evaluate_batch(ctx, batch, threads);
      for (std::size_t i = 0; i < batch.size(); ++i) {
        ++st.candidates;
        if (!outs[i].certificate) {
          ++st.rejections[outs[i].rejection];
          continue;
        }
        SearchResult r{batch[i].point.value(), batch[i].point.height(), std::move(*outs[i].certificate)};
        rep.results.push_back(std::move(r));
        const bool more = !on_result || on_result(rep.results.back());
        if (!more || static_cast<long>(rep.results.size()) >= max_results) {
          st.stop = "max-results";
          return rep;
        }
      }
      if (st.candidates >= cfg.max_candidates) {
        st.stop = "candidate-budget";
        return rep;
      }
    }
  }
  st.stop = "height-bound";
  return rep;
}

std::vector<SearchResult> find_lines(const SearchContext& ctx, long max_results) {
  SearchReport rep = search_lines(ctx, max_results);
  if (!rep.results.empty()) return std::move(rep.results);
  const std::string msg = "no certified line: " + stats_summary(rep.stats);
  auto it = rep.stats.rejections.find("precision");
  if (it != rep.stats.rejections.end() && it->second > 0) throw PrecisionError(msg);
  throw SearchExhausted(msg);
}

std::string stats_summary(const SearchStats& s) {
  std::ostringstream os;
  os << s.candidates << " candidates up to height " << s.last_height << ", stopped at " << s.stop;
  if (!s.rejections.empty()) {
    os << "; rejected:";
    for (const auto& [k, v] : s.rejections) os << " " << k << "=" << v;
  }
  return os.str();
}

Json to_json(const SearchStats& s) {
  return Json{{"candidates", s.candidates}, {"last_height", s.last_height}, {"rejections", s.rejections},
              {"stop", s.stop}};
}

Json to_json(const SearchResult& r) {
  return Json{{"parameters", to_json(std::vector<Rational>(r.parameters.begin(), r.parameters.end()))},
              {"height", r.height},
              {"certificate", r.certificate.document}};
}

Json to_json(const SearchReport& r) {
  Json results = Json::array();
  for (const auto& x : r.results) results.push_back(to_json(x));
  return Json{{"schema", "hmsl.search/1"}, {"results", results}, {"statistics", to_json(r.stats)}};
}

}  // namespace hmsl
