#include "bsomega/verify.hpp"

#include <stdexcept>

#include "bsomega/limits.hpp"

namespace bsomega {

Json RunConfig::to_json() const {
  return {{"seed", seed},
          {"samples", samples},
          {"radius", radius},
          {"n_range", n_range},
          {"shift", shift == ShiftConvention::RelationFixed ? "fixed"
                                                            : "paper"},
          {"precision_bits", precision_bits}};
}

bool VerifyOutcome::all_expected() const {
  for (const CheckOutcome& o : outcomes)
    if (!o.ok()) return false;
  return true;
}

Json VerifyOutcome::to_json() const {
  Json suites = Json::array();
  for (const AuditReport& r : reports) suites.push_back(r.to_json());
  return {{"config", config.to_json()}, {"suites", suites}};
}

std::vector<std::string> expand_suites(
    const std::vector<std::string>& names) {
  static const std::vector<std::string> canonical = {
      "relations", "orders", "lemma", "conditions", "derived", "freeness"};
  std::vector<std::string> out;
  const auto push = [&](const std::string& s) {
    for (const std::string& seen : out)
      if (seen == s) return;
    out.push_back(s);
  };
  for (const std::string& n : names) {
    if (n == "all") {
      for (const std::string& s : canonical) push(s);
    } else {
      bool known = false;
      for (const std::string& s : canonical) known = known || s == n;
      if (!known) throw std::invalid_argument("unknown suite '" + n + "'");
      push(n);
    }
  }
  return out;
}

AuditCheck::Status expected_status(const std::string& report_suite,
                                   const std::string& check,
                                   const RunConfig& cfg) {
  using Status = AuditCheck::Status;
  if (report_suite == "relations" && check == "relation_iii_action" &&
      cfg.shift == ShiftConvention::PaperLiteral)
    return Status::Counterexample;
  if (report_suite == "order_axioms_gamma" && check == "left_invariance")
    return Status::Counterexample;
  if (report_suite == "lemma") {
    if (check == "preserve_a") return Status::Counterexample;
    if (check == "gamma_left_invariance") return Status::Counterexample;
  }
  return Status::Pass;
}

namespace {

// The lemma suite: preservation of <_3 by the generator actions, the
// positive left-invariance instance the extension order inherits on
// BS(1,2), and the induced left-invariance defect of < on Gamma.
AuditReport lemma_suite(const std::vector<GammaElement>& pool,
                        const RunConfig& cfg) {
  AuditReport report{"lemma", {}};
  AuditReport preservation = audit_action_preservation();
  for (AuditCheck& c : preservation.checks)
    report.checks.push_back(std::move(c));

  AuditReport bs = audit_order_axioms(OrderKind::Order4, pool, cfg.samples,
                                      cfg.seed);
  for (AuditCheck& c : bs.checks) {
    if (c.name == "left_invariance") {
      c.name = "bs_left_invariance";
      report.checks.push_back(std::move(c));
    }
  }

  AuditReport gamma = audit_order_axioms(OrderKind::OrderGamma, pool,
                                         cfg.samples, cfg.seed);
  for (AuditCheck& c : gamma.checks) {
    if (c.name == "left_invariance") {
      c.name = "gamma_left_invariance";
      report.checks.push_back(std::move(c));
    }
  }
  return report;
}

}  // namespace

VerifyOutcome run_suites(const std::vector<std::string>& suites,
                         const RunConfig& cfg) {
  set_sign_initial_bits(cfg.precision_bits);
  VerifyOutcome outcome;
  outcome.config = cfg;

  const std::vector<std::string> expanded = expand_suites(suites);

  // Pools shared across suites, built on demand.
  std::vector<GammaElement> pool;
  const auto ball_pool = [&]() -> const std::vector<GammaElement>& {
    if (pool.empty()) pool = ball(cfg.radius);
    return pool;
  };

  for (const std::string& name : expanded) {
    if (name == "relations") {
      outcome.reports.push_back(audit_relations(cfg.shift));
    } else if (name == "orders") {
      for (const OrderKind kind :
           {OrderKind::Order1, OrderKind::Order2, OrderKind::Order3,
            OrderKind::Order4, OrderKind::OrderGamma}) {
        outcome.reports.push_back(
            audit_order_axioms(kind, ball_pool(), cfg.samples, cfg.seed));
      }
    } else if (name == "lemma") {
      outcome.reports.push_back(lemma_suite(ball_pool(), cfg));
    } else if (name == "conditions") {
      outcome.reports.push_back(audit_conditions(
          ball_pool(), RunConfig::kGBallRadius, cfg.n_range));
    } else if (name == "derived") {
      outcome.reports.push_back(derived_certificate());
      const std::vector<GammaElement> solv_pool =
          ball(RunConfig::kSolvabilityPoolRadius);
      for (int level = 1; level <= 3; ++level) {
        outcome.reports.push_back(
            sample_solvability(level, RunConfig::kSolvabilitySamples,
                               cfg.seed, solv_pool));
      }
    } else if (name == "freeness") {
      outcome.reports.push_back(freeness_report(ball_pool(),
                                                RunConfig::kCofinalityNMax,
                                                RunConfig::kRealizeRadius));
    }
  }

  for (const AuditReport& r : outcome.reports) {
    for (const AuditCheck& c : r.checks) {
      CheckOutcome co;
      co.suite = r.suite;
      co.check = c.name;
      co.status = c.status;
      co.expected = expected_status(r.suite, c.name, cfg);
      if (c.witness) co.witness_replayed = replay_witness(*c.witness);
      outcome.outcomes.push_back(std::move(co));
    }
  }
  return outcome;
}

}  // namespace bsomega
