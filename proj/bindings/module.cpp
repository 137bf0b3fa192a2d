// Python module: the main operations of the bsomega core — word parsing,
// exact group arithmetic, the left orders, the audit suites and the
// finite-scale realization.  JSON-valued results cross the boundary as
// strings; parse them with the json module.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bsomega/json_io.hpp"
#include "bsomega/limits.hpp"
#include "bsomega/realization.hpp"
#include "bsomega/verify.hpp"
#include "bsomega/word_parser.hpp"

namespace py = pybind11;
using namespace bsomega;

namespace {

RunConfig make_config(std::uint64_t seed, int samples, int radius,
                      int n_range, const std::string& shift,
                      long precision) {
  RunConfig cfg;
  cfg.seed = seed;
  cfg.samples = samples;
  cfg.radius = radius;
  cfg.n_range = n_range;
  cfg.precision_bits = precision;
  if (shift == "paper")
    cfg.shift = ShiftConvention::PaperLiteral;
  else if (shift != "fixed")
    throw std::invalid_argument("shift must be 'fixed' or 'paper'");
  return cfg;
}

}  // namespace

PYBIND11_MODULE(bsomega, m) {
  m.doc() = "exact auditor for the left-ordered group BS(1,2) |x Omega";
  m.attr("__version__") = "0.1.0";

  py::register_exception<ParseError>(m, "WordParseError");
  py::register_exception<ResourceLimitError>(m, "ResourceLimit");

  py::class_<GammaElement>(m, "GammaElement")
      .def(py::init<>())
      .def_static("identity", &GammaElement::identity)
      .def("__mul__", [](const GammaElement& a,
                         const GammaElement& b) { return a * b; })
      .def("inverse", &GammaElement::inverse)
      .def("pow",
           [](const GammaElement& g, long n) { return g.pow(mpz_class(n)); })
      .def("is_identity", &GammaElement::is_identity)
      .def("__eq__", [](const GammaElement& a,
                        const GammaElement& b) { return a == b; })
      .def("__repr__", &GammaElement::to_string)
      .def("to_word", &GammaElement::to_word)
      .def("to_json", [](const GammaElement& g) { return to_json(g).dump(); });

  m.def("t", &GammaElement::gen_t, "generator t");
  m.def("a", &GammaElement::gen_a, "generator a");
  m.def("b", &GammaElement::gen_b, "generator b");

  m.def("parse_word", [](const std::string& w) { return parse_word(w); },
        py::arg("word"), "normal form of a word over t a b T A B");

  m.def("conj", &gamma_conj, py::arg("g"), py::arg("h"), "g h g^-1");
  m.def("comm", &gamma_comm, py::arg("g"), py::arg("h"),
        "[g, h] = g h g^-1 h^-1");

  m.def(
      "cmp",
      [](const GammaElement& g, const GammaElement& h) {
        return to_string(cmp_gamma(g, h));
      },
      py::arg("g"), py::arg("h"),
      "verdict of the left order <: 'Less', 'Equal' or 'Greater'");
  m.def(
      "cmp_words",
      [](const std::string& w1, const std::string& w2) {
        return to_string(cmp_gamma(parse_word(w1), parse_word(w2)));
      },
      py::arg("word1"), py::arg("word2"));

  m.def(
      "ball",
      [](int radius) { return ball(radius); }, py::arg("radius"),
      "ball of the word metric, sorted ascending by <");

  m.def(
      "verify",
      [](const std::vector<std::string>& suites, std::uint64_t seed,
         int samples, int radius, int n_range, const std::string& shift,
         long precision) {
        const VerifyOutcome outcome = run_suites(
            suites,
            make_config(seed, samples, radius, n_range, shift, precision));
        return py::make_tuple(outcome.all_expected(),
                              outcome.to_json().dump());
      },
      py::arg("suites"), py::arg("seed") = 1, py::arg("samples") = 10000,
      py::arg("radius") = 5, py::arg("n_range") = 16,
      py::arg("shift") = "fixed", py::arg("precision") = 64,
      "run audit suites; returns (all_expected, report_json)");

  m.def(
      "realize",
      [](int radius) {
        return realization_artifact(radius, RunConfig::kCofinalityNMax)
            .dump();
      },
      py::arg("radius"), "finite-scale embedding artifact as JSON");

  m.def(
      "replay_report",
      [](const std::string& report_json) {
        const Json j = Json::parse(report_json);
        int total = 0, ok = 0;
        const auto one = [&](const Json& suite) {
          for (const Json& c : suite.at("checks")) {
            if (!c.contains("witness")) continue;
            ++total;
            if (replay_witness(Witness::from_json(c.at("witness")))) ++ok;
          }
        };
        if (j.contains("suites"))
          for (const Json& s : j.at("suites")) one(s);
        else if (j.contains("reports"))
          for (const Json& s : j.at("reports")) one(s);
        else
          one(j);
        return py::make_tuple(ok, total);
      },
      py::arg("report_json"),
      "re-verify every witness in a report; returns (replayed, total)");

  m.def("ball_element_budget", &ball_element_budget);
  m.def("set_ball_element_budget", &set_ball_element_budget);
  m.def("max_pow2_bits", &max_pow2_bits);
  m.def("set_max_pow2_bits", &set_max_pow2_bits);
}
