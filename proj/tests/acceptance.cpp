// Acceptance suite: one pass/fail line per criterion, every tolerance
// pinned in code.  Exit status 0 only if every criterion holds.

#include <cstdio>
#include <string>
#include <vector>

#include "bsomega/audits.hpp"
#include "bsomega/realization.hpp"
#include "bsomega/verify.hpp"
#include "bsomega/word_parser.hpp"
#include "test_support.hpp"

using namespace bsomega;
using bsomega::testing::mpf_sign_oracle;
using bsomega::testing::random_radical;

namespace {

int g_failures = 0;

void criterion(const char* name, bool ok, const std::string& note = "") {
  std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", name,
              note.empty() ? "" : " -- ", note.c_str());
  if (!ok) ++g_failures;
}

bool check_status(const AuditReport& r, const char* name,
                  AuditCheck::Status expected, bool need_replay = false) {
  const AuditCheck* c = r.find(name);
  if (!c || c->status != expected) return false;
  if (need_replay) {
    if (!c->witness) return false;
    if (!replay_witness(*c->witness)) return false;
  }
  return true;
}

long detail_long(const AuditReport& r, const char* name, const char* key) {
  const AuditCheck* c = r.find(name);
  return c ? c->detail.at(key).get<long>() : -1;
}

// --- criterion 1: ring kernel -------------------------------------------

void ring_kernel() {
  bool roots_ok = true;
  for (int k = 0; k <= 10; ++k) {
    const Radical root = Radical::pow2(Dyadic(1, k));
    Radical acc(1);
    for (long i = 0; i < (1L << k); ++i) acc = acc * root;
    roots_ok = roots_ok && acc == Radical(2);
  }
  criterion("ring: (2^(1/2^k))^(2^k) = 2 exactly for k <= 10", roots_ok);

  SplitMix64 rng(2024);
  int disagreements = 0, undecided = 0;
  for (int i = 0; i < 10000; ++i) {
    const Radical x = random_radical(rng, 6, 8, true);
    const int oracle = mpf_sign_oracle(x, 256);
    if (oracle == 0) {
      ++undecided;
      continue;
    }
    if (x.sign() != oracle) ++disagreements;
  }
  criterion("ring: sign agrees with the 256-bit oracle on 10^4 elements",
            disagreements == 0 && undecided == 0,
            "disagreements=" + std::to_string(disagreements) +
                " undecided=" + std::to_string(undecided));
}

// --- criterion 2: relations ----------------------------------------------

void relations() {
  const AuditReport fixed = audit_relations(ShiftConvention::RelationFixed, 4);
  const bool fixed_ok =
      fixed.all_pass() &&
      detail_long(fixed, "relation_v_commuting_conjugates", "cases") == 81 &&
      detail_long(fixed, "relation_v_commuting_conjugates", "violations") == 0;
  criterion("relations: t a t^-1 = a^2, a b a^-1 = b^2, 81 commuting cases",
            fixed_ok);

  const AuditReport paper = audit_relations(ShiftConvention::PaperLiteral, 4);
  const AuditCheck* action = paper.find("relation_iii_action");
  const bool paper_ok =
      action && action->status == AuditCheck::Status::Counterexample &&
      action->detail.at("acts_as").get<std::string>() == "a^(1/2)" &&
      action->witness && replay_witness(*action->witness);
  criterion("relations: paper-literal shift reports t a t^-1 = a^(1/2)",
            paper_ok);
}

// --- criterion 3: derived series ------------------------------------------

void derived_series() {
  const AuditReport cert = derived_certificate();
  criterion("derived: certificate [t,a]=a, [a,b]=b, [[t,a],[a,b]]=b != 1",
            cert.all_pass());

  const std::vector<GammaElement> pool =
      ball(RunConfig::kSolvabilityPoolRadius);
  const AuditReport lvl3 = sample_solvability(3, 1000, 1, pool);
  const bool all_identity =
      lvl3.all_pass() &&
      detail_long(lvl3, "level3_sampled_commutators", "identity_count") ==
          1000;
  criterion("derived: 10^3 seeded level-3 commutators are all identity",
            all_identity);
}

// --- criterion 4: order axioms --------------------------------------------

void order_axioms(const std::vector<GammaElement>& pool6) {
  bool axioms_ok = true;
  std::string note;
  for (const OrderKind kind :
       {OrderKind::Order1, OrderKind::Order2, OrderKind::Order3,
        OrderKind::Order4, OrderKind::OrderGamma}) {
    const AuditReport r = audit_order_axioms(kind, pool6, 10000, 1);
    for (const char* check : {"totality", "antisymmetry", "transitivity"}) {
      const bool ok = check_status(r, check, AuditCheck::Status::Pass) &&
                      detail_long(r, check, "violations") == 0;
      if (!ok) note += std::string(order_kind_name(kind)) + "/" + check + " ";
      axioms_ok = axioms_ok && ok;
    }
    if (kind == OrderKind::Order3) {
      const bool ok =
          check_status(r, "translation_invariance", AuditCheck::Status::Pass) &&
          detail_long(r, "translation_invariance", "violations") == 0;
      if (!ok) note += "order3/translation ";
      axioms_ok = axioms_ok && ok;
    }
    if (kind == OrderKind::Order4) {
      const bool ok =
          check_status(r, "left_invariance", AuditCheck::Status::Pass) &&
          detail_long(r, "left_invariance", "violations") == 0;
      if (!ok) note += "order4/left_invariance ";
      axioms_ok = axioms_ok && ok;
    }
  }
  criterion(
      "orders: axioms hold on 10^4 ball(6) triples for <_1..<_4 and <; "
      "<_3 translation and <_4 left-invariance hold",
      axioms_ok, note);
}

// --- criterion 5: the Lemma audit -----------------------------------------

void lemma_audit(const std::vector<GammaElement>& pool6) {
  const AuditReport pres = audit_action_preservation();
  const bool t_ok = check_status(pres, "preserve_t", AuditCheck::Status::Pass);
  criterion("lemma: generator t preserves <_3 on the exhaustive grid", t_ok);

  const bool a_ok = check_status(pres, "preserve_a",
                                 AuditCheck::Status::Counterexample, true);
  // the derived pair: y = delta_1 * 7/8 <_3 x = delta_0 * 1 flips under a
  const OmegaElement x = OmegaElement::delta(0, Radical(1));
  const OmegaElement y = OmegaElement::delta(1, Radical(Dyadic(7, 3)));
  const bool pair_ok =
      cmp_omega(y, x) == Verdict::Less &&
      cmp_omega(apply_a_power(y, Dyadic(1)), apply_a_power(x, Dyadic(1))) ==
          Verdict::Greater;
  criterion(
      "lemma: generator a yields a replayable grid counterexample, and the "
      "derived pair (delta_0*1, delta_1*7/8) violates",
      a_ok && pair_ok);

  const AuditReport gamma =
      audit_order_axioms(OrderKind::OrderGamma, pool6, 1000, 1);
  const bool li_ok = check_status(gamma, "left_invariance",
                                  AuditCheck::Status::Counterexample, true) &&
                     detail_long(gamma, "left_invariance", "grid_violations") >
                         0;
  criterion("lemma: induced left-invariance violation of < is produced and "
            "replays",
            li_ok);
}

// --- criterion 6: conditions ----------------------------------------------

void conditions(const std::vector<GammaElement>& pool6) {
  const AuditReport r = audit_conditions(pool6, 8, 16);
  criterion("conditions: (ii) 1 < t < a < b exact",
            check_status(r, "condition_ii_generators",
                         AuditCheck::Status::Pass));
  criterion("conditions: (vi) 0 violations over all ball(6) pairs",
            check_status(r, "condition_vi", AuditCheck::Status::Pass) &&
                detail_long(r, "condition_vi", "violations") == 0);
  criterion("conditions: (vii) 0 violations over all ball(6) pairs",
            check_status(r, "condition_vii", AuditCheck::Status::Pass) &&
                detail_long(r, "condition_vii", "violations") == 0);
  criterion(
      "conditions: (viii) h = a^-1 b a against G-ball(8), |n| <= 16, both "
      "sign conventions",
      check_status(r, "condition_viii", AuditCheck::Status::Pass) &&
          detail_long(r, "condition_viii", "violations") == 0);
}

// --- criterion 7: freeness proxy ------------------------------------------

void freeness() {
  const std::vector<GammaElement> pool5 = ball(5);
  const AuditReport r =
      freeness_report(pool5, RunConfig::kCofinalityNMax, 4);
  criterion("freeness: b g > g exactly for every g in ball(5)",
            check_status(r, "b_translation_increases",
                         AuditCheck::Status::Pass) &&
                detail_long(r, "b_translation_increases", "violations") == 0);
  const long bound = detail_long(r, "cofinality_bounds", "max_bound");
  criterion("freeness: cofinality bounds exist for all of ball(5)",
            check_status(r, "cofinality_bounds", AuditCheck::Status::Pass) &&
                detail_long(r, "cofinality_bounds", "unbounded") == 0,
            "max bound n = " + std::to_string(bound));
  criterion("freeness: realized b map strictly above the diagonal at radius 4",
            check_status(r, "realized_b_above_diagonal",
                         AuditCheck::Status::Pass) &&
                detail_long(r, "realized_b_above_diagonal", "violations") ==
                    0);
}

// --- criterion 8: realization ---------------------------------------------

void realization() {
  const RealizedBall rb = build_embedding(5);
  bool increasing = true;
  for (std::size_t i = 0; i + 1 < rb.elements().size(); ++i) {
    increasing = increasing &&
                 cmp_gamma(rb.elements()[i], rb.elements()[i + 1]) ==
                     Verdict::Less &&
                 rb.coord(i) < rb.coord(i + 1);
  }
  criterion("realization: phi strictly order-preserving at radius 5",
            increasing);

  criterion("realization: (c2) sandwich passes",
            check_c2(rb).all_pass());

  const AuditReport c3 = check_c3(rb);
  criterion("realization: (c3) proxy finds no jointly fixed realized point",
            c3.all_pass() &&
                detail_long(c3, "no_common_fixed_point", "jointly_fixed") ==
                    0);

  const Json a1 = realization_artifact(4, RunConfig::kCofinalityNMax);
  const Json a2 = realization_artifact(4, RunConfig::kCofinalityNMax);
  criterion("realization: reports byte-identical across two runs",
            a1.dump() == a2.dump());
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  ring_kernel();
  relations();
  derived_series();

  const std::vector<GammaElement> pool6 = ball(6);
  order_axioms(pool6);
  lemma_audit(pool6);
  conditions(pool6);

  freeness();
  realization();

  std::printf("%s (%d failing)\n",
              g_failures == 0 ? "ALL CRITERIA PASS" : "CRITERIA FAILING",
              g_failures);
  return g_failures == 0 ? 0 : 1;
}
