// bsomega -- exact auditor for the left-ordered group BS(1,2) |x Omega.
//
// Subcommands: eval, cmp, verify, realize, replay.  Exit codes: 0 success,
// 1 unexpected audit outcome, 2 word syntax error, 3 resource bound
// exceeded.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "bsomega/json_io.hpp"
#include "bsomega/limits.hpp"
#include "bsomega/realization.hpp"
#include "bsomega/verify.hpp"
#include "bsomega/word_parser.hpp"

namespace {

using namespace bsomega;

constexpr int kExitUnexpected = 1;
constexpr int kExitParse = 2;
constexpr int kExitResource = 3;

void write_json(const Json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << j.dump(2) << "\n";
}

int cmd_eval(const std::string& word, bool as_json) {
  const GammaElement g = parse_word(word);
  if (as_json) {
    std::cout << to_json(g).dump(2) << "\n";
  } else {
    std::cout << g.to_string() << "\n";
  }
  return 0;
}

int cmd_cmp(const std::string& w1, const std::string& w2) {
  const GammaElement g = parse_word(w1);
  const GammaElement h = parse_word(w2);
  const GammaCmpExplained r = cmp_gamma_explained(g, h);
  const char* stage = nullptr;
  switch (r.stage) {
    case GammaCmpExplained::Stage::OmegaSum: stage = "Omega-sum"; break;
    case GammaCmpExplained::Stage::OmegaTie: stage = "Omega-tiebreak"; break;
    case GammaCmpExplained::Stage::AExp: stage = "u"; break;
    case GammaCmpExplained::Stage::TExp: stage = "k"; break;
    default: stage = "equal";
  }
  std::cout << to_string(r.verdict) << " (stage: " << stage;
  if (r.stage != GammaCmpExplained::Stage::Equal)
    std::cout << ", " << r.lhs << " vs " << r.rhs;
  std::cout << ")\n";
  return 0;
}

int cmd_verify(const std::vector<std::string>& suites, const RunConfig& cfg,
               const std::string& json_path) {
  const VerifyOutcome outcome = run_suites(suites, cfg);
  if (!json_path.empty()) {
    write_json(outcome.to_json(), json_path);
  }
  if (json_path.empty() || json_path != "-") {
    for (const CheckOutcome& o : outcome.outcomes) {
      std::cout << "[" << o.suite << "] " << o.check << ": "
                << AuditCheck::status_string(o.status) << " (expected "
                << AuditCheck::status_string(o.expected) << ")"
                << (o.witness_replayed ? "" : " [witness replay FAILED]")
                << (o.ok() ? "" : " UNEXPECTED") << "\n";
    }
    for (const AuditReport& r : outcome.reports) {
      for (const AuditCheck& c : r.checks) {
        if (!c.witness) continue;
        std::cout << "  witness [" << r.suite << "/" << c.name << "] "
                  << c.witness->property << ": elements "
                  << c.witness->elements.dump() << " details "
                  << c.witness->details.dump() << "\n";
      }
    }
    std::cout << (outcome.all_expected() ? "all checks met expectations"
                                         : "unexpected outcomes present")
              << "\n";
  }
  return outcome.all_expected() ? 0 : kExitUnexpected;
}

int cmd_realize(int radius, const std::string& json_path, bool render) {
  if (render) {
    const RealizedBall rb = build_embedding(radius);
    std::cout << rb.render_number_line();
    return 0;
  }
  const Json artifact =
      realization_artifact(radius, RunConfig::kCofinalityNMax);
  write_json(artifact, json_path);
  return 0;
}

int count_witnesses(const Json& report, int& replayed) {
  int total = 0;
  if (report.contains("checks")) {
    for (const Json& c : report.at("checks")) {
      if (!c.contains("witness")) continue;
      ++total;
      const Witness w = Witness::from_json(c.at("witness"));
      const bool ok = replay_witness(w);
      if (ok) ++replayed;
      std::cout << "witness[" << report.at("suite").get<std::string>() << "/"
                << c.at("name").get<std::string>() << "]: "
                << (ok ? "replays" : "DOES NOT REPLAY") << "\n";
    }
  }
  return total;
}

int cmd_replay(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return kExitUnexpected;
  }
  Json j = Json::parse(in);
  int total = 0, replayed = 0;
  if (j.contains("suites")) {
    for (const Json& r : j.at("suites")) total += count_witnesses(r, replayed);
  } else if (j.contains("reports")) {  // realization artifact
    for (const Json& r : j.at("reports")) total += count_witnesses(r, replayed);
  } else {
    total += count_witnesses(j, replayed);
  }
  std::cout << replayed << "/" << total << " witnesses replayed\n";
  return replayed == total ? 0 : kExitUnexpected;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* budget = std::getenv("BSOMEGA_BALL_BUDGET")) {
    set_ball_element_budget(std::strtoull(budget, nullptr, 10));
  }

  CLI::App app{"exact auditor for the left-ordered group BS(1,2) |x Omega"};
  app.require_subcommand(1);

  std::string word, word2, json_path;
  bool as_json = false, render = false;
  RunConfig cfg;
  std::string shift = "fixed";
  std::vector<std::string> suites;
  int radius = 4;

  CLI::App* eval = app.add_subcommand("eval", "normal form of a word");
  eval->add_option("word", word, "word over t a b T A B with ^powers")
      ->required();
  eval->add_flag("--json", as_json, "emit JSON");

  CLI::App* cmp = app.add_subcommand("cmp", "compare two words under <");
  cmp->add_option("word1", word, "")->required();
  cmp->add_option("word2", word2, "")->required();

  CLI::App* verify = app.add_subcommand("verify", "run audit suites");
  verify
      ->add_option("suite", suites,
                   "relations|orders|lemma|conditions|derived|freeness|all")
      ->required();
  verify->add_option("--seed", cfg.seed, "sampling seed");
  verify->add_option("--samples", cfg.samples, "sampled triples per check");
  verify->add_option("--radius", cfg.radius, "ball radius for pools");
  verify->add_option("--n-range", cfg.n_range, "conjugate range for (viii)");
  verify->add_option("--shift", shift, "fixed|paper action convention");
  verify->add_option("--precision", cfg.precision_bits,
                     "initial sign-refinement bits");
  verify->add_option("--json", json_path, "write JSON report ('-' = stdout)");

  CLI::App* realize = app.add_subcommand("realize", "finite-scale embedding");
  realize->add_option("radius", radius, "ball radius")->required();
  realize->add_option("--json", json_path, "write JSON ('-' = stdout)");
  realize->add_flag("--render", render, "plain-text number line");

  CLI::App* replay = app.add_subcommand("replay", "re-verify report witnesses");
  std::string report_path;
  replay->add_option("report", report_path, "report JSON path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed()) return cmd_eval(word, as_json);
    if (cmp->parsed()) return cmd_cmp(word, word2);
    if (verify->parsed()) {
      if (shift == "paper")
        cfg.shift = ShiftConvention::PaperLiteral;
      else if (shift != "fixed")
        throw CLI::ValidationError("--shift must be fixed or paper");
      return cmd_verify(suites, cfg, json_path);
    }
    if (realize->parsed()) return cmd_realize(radius, json_path, render);
    if (replay->parsed()) return cmd_replay(report_path);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnexpected;
  }
  return 0;
}
