#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hmsl/errors.hpp"
#include "hmsl/io/json.hpp"
#include "hmsl/mpoly/galois.hpp"
#include "hmsl/mpoly/real_roots.hpp"
#include "hmsl/search/certificate.hpp"
#include "hmsl/search/identities.hpp"
#include "hmsl/search/search.hpp"
#include "hmsl/search/solvability.hpp"

namespace py = pybind11;
using namespace hmsl;

namespace {

// Everything crosses the boundary as JSON text; the Python side decodes it.

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
}

BinaryQuartic<Rational> quartic(const std::vector<std::string>& coeffs) {
  if (coeffs.size() != 5) throw DomainError("a binary quartic has five coefficients");
  BinaryQuartic<Rational> q;
  for (std::size_t i = 0; i < 5; ++i) q.c[i] = rational_from_json(Json(coeffs[i]));
  return q;
}

std::string verify_paper_json() {
  Json out = Json::array();
  for (const auto& c : reference_identity_suite())
    out.push_back(Json{{"criterion", c.criterion}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return out.dump();
}

std::string find_lines_json(const std::string& config, long max_results, unsigned threads) {
  SearchContext ctx(parse_config(parse(config)));
  SearchReport rep;
  {
    py::gil_scoped_release release;
    rep = search_lines(ctx, max_results, {}, threads);
  }
  return to_json(rep).dump();
}

std::string certify_json(const std::string& line, const std::string& config) {
  SearchContext ctx(parse_config(parse(config)));
  Line<Rational> l = line_from_json(parse(line));
  py::gil_scoped_release release;
  return certify_line(l, ctx).dump();
}

std::string solvability_json(const std::vector<std::string>& coeffs) {
  SolvabilityReport r = solvability_report(quartic(coeffs));
  Json factors = Json::array();
  for (const auto& f : r.factors) {
    Json form = Json::array();
    for (const auto& c : f.form) form.push_back(c.get_str());
    factors.push_back(Json{{"form", form}, {"degree", f.degree}, {"group", f.group}, {"order", f.order}});
  }
  return Json{{"factors", factors}, {"group", r.group.name()}, {"order", r.group.order}, {"solvable", r.solvable()}}
      .dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact search and certification of lines on twisted Hilbert modular surfaces";

  auto base = py::register_exception<Error>(m, "HmslError");
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<PrecisionError>(m, "PrecisionError", base.ptr());
  py::register_exception<SearchExhausted>(m, "SearchExhausted", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());

  m.def("verify_paper", &verify_paper_json, "Reference identity suite as a JSON list.");
  m.def("find_lines", &find_lines_json, py::arg("config"), py::arg("max_results") = 1, py::arg("threads") = 0,
        "Search report (JSON) for a config given as JSON text.");
  m.def("certify", &certify_json, py::arg("line"), py::arg("config"), "Certificate (JSON) of a line under a config.");
  m.def("solvability", &solvability_json, py::arg("coeffs"),
        "Factorization over Q with Galois groups; coefficients of t^0 u^4 .. t^4 u^0 as strings.");
  m.def(
      "galois_group",
      [](const std::vector<std::string>& coeffs) {
        QuarticGaloisGroup g = quartic_galois_group(quartic(coeffs));
        return py::make_tuple(g.name(), g.order);
      },
      py::arg("coeffs"));
  m.def(
      "real_root_count", [](const std::vector<std::string>& coeffs) { return real_root_count(quartic(coeffs)); },
      py::arg("coeffs"));
  m.attr("CERTIFICATE_SCHEMA") = kCertificateSchema;
}
