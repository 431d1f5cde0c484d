#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "hmsl/errors.hpp"
#include "hmsl/io/json.hpp"
#include "hmsl/search/certificate.hpp"
#include "hmsl/search/identities.hpp"
#include "hmsl/search/search.hpp"

namespace {

using namespace hmsl;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kNoLine = 2;
constexpr int kBadConfig = 3;
constexpr int kPrecision = 4;

std::string coords(const std::vector<Rational>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x.str();
  return "(" + s + ")";
}

void print_certificate(const SolvableLineCertificate& c) {
  const Json& d = c.document;
  std::cout << "  line P = " << coords(c.line.p()) << "\n";
  std::cout << "       Q = " << coords(c.line.q()) << "\n";
  std::cout << "  quartic (t^0..t^4): " << d["quartic"].size() << " coefficients";
  if (!d["galois"].is_null()) std::cout << ", Galois group " << d["galois"]["label"].get<std::string>();
  std::cout << ", real roots " << c.real_root_count << "\n";
  if (!d["primes"].is_null())
    for (const char* p : {"3", "5"}) {
      const Json& r = d["primes"][p];
      std::cout << "  mod " << p << ": " << r["pattern"].get<std::string>() << ", "
                << r["verdict"].get<std::string>() << ", ordinarity " << r["ordinarity"].get<std::string>()
                << "\n";
    }
  std::cout << "  " << (c.pass ? "PASS" : "FAIL");
  for (const auto& f : c.failures) std::cout << " " << f;
  std::cout << "\n";
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  try {
    Json j;
    in >> j;
    return j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path + " is not valid JSON: " + e.what());
  }
}

// A line file holds a line, a certificate, or find-line output (first
// result).
Line<Rational> read_line(const std::string& path) {
  Json j = read_json(path);
  if (j.is_object() && j.contains("results")) {
    if (j["results"].empty()) throw ConfigError(path + " holds no search result");
    j = j["results"][0]["certificate"];
  }
  if (j.is_object() && j.contains("line")) j = j["line"];
  return line_from_json(j);
}

int verify_paper(bool json) {
  std::vector<IdentityCheck> checks = reference_identity_suite();
  if (json) {
    Json out = Json::array();
    for (const auto& c : checks)
      out.push_back(Json{{"criterion", c.criterion}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    std::cout << Json{{"checks", out}, {"pass", all_pass(checks)}}.dump(2) << "\n";
  } else {
    for (const auto& c : checks)
      std::cout << (c.pass ? "PASS" : "FAIL") << " [" << c.criterion << "] " << c.name << ": " << c.detail << "\n";
  }
  return all_pass(checks) ? kOk : kFailed;
}

int find_line(const std::string& config_path, long max_results, unsigned threads, bool json) {
  SearchContext ctx(load_config(config_path));
  ResultCallback print;
  if (!json) {
    print = [](const SearchResult& r) {
      std::cout << "line at height " << r.height << ", chart parameters "
                << coords({r.parameters.begin(), r.parameters.end()}) << "\n";
      print_certificate(r.certificate);
      return true;
    };
  }
  SearchReport rep = search_lines(ctx, max_results, print, threads);
  if (json) {
    std::cout << to_json(rep).dump(2) << "\n";
  } else {
    std::cout << stats_summary(rep.stats) << "\n";
  }
  if (!rep.results.empty()) return kOk;
  auto it = rep.stats.rejections.find("precision");
  if (it != rep.stats.rejections.end() && it->second > 0) {
    std::cerr << "precision exhausted on " << it->second << " candidates\n";
    return kPrecision;
  }
  std::cerr << "no certified line within the bounds\n";
  return kNoLine;
}

int certify(const std::string& line_path, const std::string& config_path, bool json) {
  SearchContext ctx(load_config(config_path));
  Line<Rational> l = read_line(line_path);
  SolvableLineCertificate c;
  try {
    c = certify_line(l, ctx);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (json) {
    std::cout << c.dump() << "\n";
  } else {
    print_certificate(c);
  }
  return c.pass ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lines on twisted Hilbert modular surfaces: search and certification"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable JSON output");

  auto* vp = app.add_subcommand("verify-paper", "Run the reference identity suite");
  vp->fallthrough();

  auto* fl = app.add_subcommand("find-line", "Search for a certified line");
  std::string config;
  long max_results = 1;
  unsigned threads = 0;
  fl->add_option("--config", config, "Search config (JSON)")->required();
  fl->add_option("--max-results", max_results, "Stop after this many lines")->check(CLI::PositiveNumber);
  fl->add_option("--threads", threads, "Worker threads (0: config or hardware)");
  fl->fallthrough();

  auto* ce = app.add_subcommand("certify", "Certify a stored line");
  std::string line;
  ce->add_option("--line", line, "Line, certificate or find-line output (JSON)")->required();
  ce->add_option("--config", config, "Search config (JSON)")->required();
  ce->fallthrough();

  CLI11_PARSE(app, argc, argv);
  try {
    if (vp->parsed()) return verify_paper(json);
    if (fl->parsed()) return find_line(config, max_results, threads, json);
    if (ce->parsed()) return certify(line, config, json);
  } catch (const ConfigError& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return kBadConfig;
  } catch (const PrecisionError& e) {
    std::cerr << "precision exhausted: " << e.what() << "\n";
    return kPrecision;
  } catch (const SearchExhausted& e) {
    std::cerr << e.what() << "\n";
    return kNoLine;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kFailed;
}
