#include "bsomega/audits.hpp"

#include <stdexcept>
#include <utility>

#include "bsomega/rng.hpp"

namespace bsomega {

// ---------------------------------------------------------------- report

Json AuditReport::to_json() const {
  Json arr = Json::array();
  for (const AuditCheck& c : checks) {
    Json jc = {{"name", c.name},
               {"status", AuditCheck::status_string(c.status)}};
    if (c.witness) jc["witness"] = c.witness->to_json();
    if (!c.detail.is_null()) jc["detail"] = c.detail;
    arr.push_back(std::move(jc));
  }
  return {{"suite", suite}, {"checks", arr}};
}

const AuditCheck* AuditReport::find(const std::string& name) const {
  for (const AuditCheck& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool AuditReport::all_pass() const {
  for (const AuditCheck& c : checks)
    if (c.status != AuditCheck::Status::Pass) return false;
  return true;
}

// ---------------------------------------------------------------- helpers

namespace {

using Status = AuditCheck::Status;

GammaElement embed_omega(const OmegaElement& x) {
  return GammaElement(BSElement::identity(), x);
}

// Coefficient grid used by the preservation and left-invariance searches;
// order fixed so the first violation found is deterministic.
const std::vector<Dyadic>& grid_coefficients() {
  static const std::vector<Dyadic> coeffs = [] {
    std::vector<Dyadic> c;
    c.push_back(Dyadic(0));
    c.push_back(Dyadic(1, 1));
    c.push_back(Dyadic(-1, 1));
    c.push_back(Dyadic(7, 3));
    c.push_back(Dyadic(-7, 3));
    c.push_back(Dyadic(1));
    c.push_back(Dyadic(-1));
    c.push_back(Dyadic(2));
    c.push_back(Dyadic(-2));
    return c;
  }();
  return coeffs;
}

std::vector<OmegaElement> preservation_grid() {
  const auto& coeffs = grid_coefficients();
  std::vector<OmegaElement> grid;
  grid.reserve(coeffs.size() * coeffs.size());
  for (const Dyadic& c0 : coeffs) {
    for (const Dyadic& c1 : coeffs) {
      grid.push_back(OmegaElement::delta(0, Radical(c0)) +
                     OmegaElement::delta(1, Radical(c1)));
    }
  }
  return grid;
}

OmegaElement apply_named_generator(const std::string& name,
                                   const OmegaElement& x) {
  if (name == "identity") return x;
  if (name == "t") return apply_t_shift(x, 1, ShiftConvention::RelationFixed);
  if (name == "a") return apply_a_power(x, Dyadic(1));
  throw std::invalid_argument("unknown generator '" + name + "'");
}

bool transitive_ok(Verdict xy, Verdict yz, Verdict xz) {
  const auto leq = [](Verdict v) { return v != Verdict::Greater; };
  const auto geq = [](Verdict v) { return v != Verdict::Less; };
  if (leq(xy) && leq(yz)) {
    if (!leq(xz)) return false;
    if ((xy == Verdict::Less || yz == Verdict::Less) && xz != Verdict::Less)
      return false;
  }
  if (geq(xy) && geq(yz)) {
    if (!geq(xz)) return false;
    if ((xy == Verdict::Greater || yz == Verdict::Greater) &&
        xz != Verdict::Greater)
      return false;
  }
  return true;
}

bool projections_equal(OrderKind kind, const GammaElement& x,
                       const GammaElement& y) {
  switch (kind) {
    case OrderKind::Order1: return x.bs().k == y.bs().k;
    case OrderKind::Order2: return x.bs().u == y.bs().u;
    case OrderKind::Order3: return x.omega() == y.omega();
    case OrderKind::Order4: return x.bs() == y.bs();
    default: return x == y;
  }
}

}  // namespace

const char* order_kind_name(OrderKind k) {
  switch (k) {
    case OrderKind::Order1: return "order1";
    case OrderKind::Order2: return "order2";
    case OrderKind::Order3: return "order3";
    case OrderKind::Order4: return "order4";
    default: return "gamma";
  }
}

namespace {

OrderKind order_kind_from_string(const std::string& s) {
  if (s == "order1") return OrderKind::Order1;
  if (s == "order2") return OrderKind::Order2;
  if (s == "order3") return OrderKind::Order3;
  if (s == "order4") return OrderKind::Order4;
  if (s == "gamma") return OrderKind::OrderGamma;
  throw std::invalid_argument("unknown order '" + s + "'");
}

}  // namespace

Verdict cmp_by_kind(OrderKind kind, const GammaElement& g,
                    const GammaElement& h) {
  switch (kind) {
    case OrderKind::Order1: return cmp_int(g.bs().k, h.bs().k);
    case OrderKind::Order2: return cmp_dyadic(g.bs().u, h.bs().u);
    case OrderKind::Order3: return cmp_omega(g.omega(), h.omega());
    case OrderKind::Order4: return cmp_bs(g.bs(), h.bs());
    default: return cmp_gamma(g, h);
  }
}

// ----------------------------------------------------------- order axioms

AuditReport audit_order_axioms(OrderKind kind,
                               const std::vector<GammaElement>& pool,
                               int count, std::uint64_t seed) {
  if (pool.empty()) throw std::invalid_argument("empty sample pool");
  const std::string order = order_kind_name(kind);
  AuditReport report{"order_axioms_" + order, {}};

  SplitMix64 rng(seed);
  const auto pick = [&]() -> const GammaElement& {
    return pool[rng.bounded(pool.size())];
  };

  AuditCheck totality{"totality"};
  AuditCheck antisymmetry{"antisymmetry"};
  AuditCheck transitivity{"transitivity"};
  long tot_viol = 0, anti_viol = 0, trans_viol = 0;

  for (int i = 0; i < count; ++i) {
    const GammaElement& x = pick();
    const GammaElement& y = pick();
    const GammaElement& z = pick();
    const Verdict xy = cmp_by_kind(kind, x, y);
    const Verdict yx = cmp_by_kind(kind, y, x);
    const Verdict yz = cmp_by_kind(kind, y, z);
    const Verdict xz = cmp_by_kind(kind, x, z);

    if (cmp_by_kind(kind, x, x) != Verdict::Equal || yx != reverse(xy)) {
      ++tot_viol;
      if (!totality.witness) {
        totality.status = Status::Counterexample;
        totality.witness = Witness{
            "swap_consistency",
            {{"x", to_json(x)}, {"y", to_json(y)}},
            {{"order", order},
             {"cmp_xy", to_string(xy)},
             {"cmp_yx", to_string(yx)}}};
      }
    }
    if (xy == Verdict::Equal && !projections_equal(kind, x, y)) {
      ++anti_viol;
      if (!antisymmetry.witness) {
        antisymmetry.status = Status::Counterexample;
        antisymmetry.witness = Witness{
            "antisymmetry",
            {{"x", to_json(x)}, {"y", to_json(y)}},
            {{"order", order}, {"cmp_xy", to_string(xy)}}};
      }
    }
    if (!transitive_ok(xy, yz, xz)) {
      ++trans_viol;
      if (!transitivity.witness) {
        transitivity.status = Status::Counterexample;
        transitivity.witness = Witness{
            "transitivity",
            {{"x", to_json(x)}, {"y", to_json(y)}, {"z", to_json(z)}},
            {{"order", order},
             {"cmp_xy", to_string(xy)},
             {"cmp_yz", to_string(yz)},
             {"cmp_xz", to_string(xz)}}};
      }
    }
  }
  totality.detail = {{"samples", count}, {"violations", tot_viol}};
  antisymmetry.detail = {{"samples", count}, {"violations", anti_viol}};
  transitivity.detail = {{"samples", count}, {"violations", trans_viol}};
  report.checks.push_back(std::move(totality));
  report.checks.push_back(std::move(antisymmetry));
  report.checks.push_back(std::move(transitivity));

  if (kind == OrderKind::Order3) {
    AuditCheck inv{"translation_invariance"};
    long viol = 0;
    SplitMix64 rng3(seed ^ 0x5151515151515151ULL);
    const auto pick3 = [&]() -> const GammaElement& {
      return pool[rng3.bounded(pool.size())];
    };
    for (int i = 0; i < count; ++i) {
      const OmegaElement x = pick3().omega();
      const OmegaElement y = pick3().omega();
      const OmegaElement z = pick3().omega();
      const Verdict before = cmp_omega(x, y);
      const Verdict after = cmp_omega(x + z, y + z);
      if (before != after) {
        ++viol;
        if (!inv.witness) {
          inv.status = Status::Counterexample;
          inv.witness = Witness{
              "translation_invariance",
              {{"x", to_json(embed_omega(x))},
               {"y", to_json(embed_omega(y))},
               {"z", to_json(embed_omega(z))}},
              {{"order", order},
               {"before", to_string(before)},
               {"after", to_string(after)}}};
        }
      }
    }
    inv.detail = {{"samples", count}, {"violations", viol}};
    report.checks.push_back(std::move(inv));
  }

  if (kind == OrderKind::Order4) {
    AuditCheck inv{"left_invariance"};
    long viol = 0;
    SplitMix64 rng4(seed ^ 0xa4a4a4a4a4a4a4a4ULL);
    const auto pick4 = [&]() -> const GammaElement& {
      return pool[rng4.bounded(pool.size())];
    };
    for (int i = 0; i < count; ++i) {
      const BSElement f = pick4().bs();
      const BSElement g = pick4().bs();
      const BSElement h = pick4().bs();
      const Verdict before = cmp_bs(g, h);
      const Verdict after = cmp_bs(f * g, f * h);
      if (before != after) {
        ++viol;
        if (!inv.witness) {
          inv.status = Status::Counterexample;
          inv.witness = Witness{
              "left_invariance",
              {{"f", to_json(GammaElement(f, {}))},
               {"g", to_json(GammaElement(g, {}))},
               {"h", to_json(GammaElement(h, {}))}},
              {{"order", order},
               {"cmp_g_h", to_string(before)},
               {"cmp_fg_fh", to_string(after)}}};
        }
      }
    }
    inv.detail = {{"samples", count}, {"violations", viol}};
    report.checks.push_back(std::move(inv));
  }

  if (kind == OrderKind::OrderGamma) {
    // Deterministic search: f = a over the coefficient grid, plus the
    // sampled triples.  A violation is the expected outcome here.
    AuditCheck inv{"left_invariance"};
    long grid_viol = 0;
    const std::vector<OmegaElement> grid = preservation_grid();
    const GammaElement f = GammaElement::gen_a();
    for (const OmegaElement& xo : grid) {
      for (const OmegaElement& yo : grid) {
        const GammaElement g = embed_omega(xo);
        const GammaElement h = embed_omega(yo);
        if (cmp_gamma(g, h) != Verdict::Less) continue;
        const Verdict after = cmp_gamma(f * g, f * h);
        if (after != Verdict::Less) {
          ++grid_viol;
          if (!inv.witness) {
            inv.status = Status::Counterexample;
            inv.witness = Witness{
                "left_invariance",
                {{"f", to_json(f)}, {"g", to_json(g)}, {"h", to_json(h)}},
                {{"order", order},
                 {"cmp_g_h", to_string(Verdict::Less)},
                 {"cmp_fg_fh", to_string(after)}}};
          }
        }
      }
    }
    long sample_viol = 0;
    SplitMix64 rngg(seed ^ 0x6a6a6a6a6a6a6a6aULL);
    const auto pickg = [&]() -> const GammaElement& {
      return pool[rngg.bounded(pool.size())];
    };
    for (int i = 0; i < count; ++i) {
      const GammaElement& f2 = pickg();
      const GammaElement& g2 = pickg();
      const GammaElement& h2 = pickg();
      const Verdict before = cmp_gamma(g2, h2);
      const Verdict after = cmp_gamma(f2 * g2, f2 * h2);
      if (before != after) ++sample_viol;
    }
    inv.detail = {{"grid_violations", grid_viol},
                  {"sample_violations", sample_viol},
                  {"samples", count}};
    report.checks.push_back(std::move(inv));
  }

  return report;
}

// ---------------------------------------------------- action preservation

AuditReport audit_action_preservation() {
  AuditReport report{"action_preservation", {}};
  const std::vector<OmegaElement> grid = preservation_grid();
  for (const std::string gen : {"identity", "t", "a"}) {
    AuditCheck check{"preserve_" + gen};
    long pairs = 0, viol = 0;
    for (const OmegaElement& x : grid) {
      for (const OmegaElement& y : grid) {
        const Verdict xy = cmp_omega(x, y);
        if (xy != Verdict::Less) continue;
        ++pairs;
        const OmegaElement sx = apply_named_generator(gen, x);
        const OmegaElement sy = apply_named_generator(gen, y);
        const Verdict img = cmp_omega(sx, sy);
        if (img != Verdict::Less) {
          ++viol;
          if (!check.witness) {
            check.status = Status::Counterexample;
            check.witness = Witness{
                "action_preservation",
                {{"x", to_json(embed_omega(x))},
                 {"y", to_json(embed_omega(y))}},
                {{"generator", gen},
                 {"cmp_x_y", to_string(xy)},
                 {"cmp_sx_sy", to_string(img)}}};
          }
        }
      }
    }
    check.detail = {{"grid_size", static_cast<long>(grid.size())},
                    {"pairs_checked", pairs},
                    {"violations", viol}};
    report.checks.push_back(std::move(check));
  }
  return report;
}

// ------------------------------------------------------------- conditions

AuditReport audit_conditions(const std::vector<GammaElement>& ball_elems,
                             int g_radius, int n_range) {
  AuditReport report{"conditions", {}};
  const GammaElement one = GammaElement::identity();
  const GammaElement t = GammaElement::gen_t();
  const GammaElement a = GammaElement::gen_a();
  const GammaElement b = GammaElement::gen_b();

  {
    AuditCheck check{"condition_ii_generators"};
    const Verdict v1 = cmp_gamma(one, t);
    const Verdict v2 = cmp_gamma(t, a);
    const Verdict v3 = cmp_gamma(a, b);
    if (v1 != Verdict::Less || v2 != Verdict::Less || v3 != Verdict::Less)
      check.status = Status::Fail;
    check.detail = {{"cmp_1_t", to_string(v1)},
                    {"cmp_t_a", to_string(v2)},
                    {"cmp_a_b", to_string(v3)}};
    report.checks.push_back(std::move(check));
  }

  // (vi) and (vii): for every positive f outside the subgroup, every
  // subgroup element g from the ball must satisfy g < f.  The first
  // comparison stage of < does not depend on g for these pairs, so the
  // per-pair verdict is computed once per f.
  const auto sweep = [&](const char* name, auto in_subgroup) {
    AuditCheck check{name};
    long pairs = 0, viol = 0;
    std::vector<const GammaElement*> members;
    for (const GammaElement& g : ball_elems)
      if (in_subgroup(g)) members.push_back(&g);
    for (const GammaElement& f : ball_elems) {
      if (in_subgroup(f)) continue;
      if (cmp_gamma(one, f) != Verdict::Less) continue;
      for (const GammaElement* g : members) {
        ++pairs;
        const Verdict v = cmp_gamma(*g, f);
        if (v != Verdict::Less) {
          ++viol;
          if (!check.witness) {
            check.status = Status::Counterexample;
            check.witness = Witness{
                "subgroup_domination",
                {{"g", to_json(*g)}, {"f", to_json(f)}},
                {{"condition", name}, {"cmp_g_f", to_string(v)}}};
          }
        }
      }
    }
    check.detail = {{"pairs_checked", pairs}, {"violations", viol}};
    report.checks.push_back(std::move(check));
  };
  sweep("condition_vi", [](const GammaElement& g) { return in_c(g); });
  sweep("condition_vii", [](const GammaElement& g) { return in_g(g); });

  {
    AuditCheck check{"condition_viii"};
    const GammaElement h = gamma_conj(a.inverse(), b);  // a^-1 b a
    long comparisons = 0, viol = 0;
    const std::vector<GammaElement> gball = g_ball(g_radius);
    for (const GammaElement& g : gball) {
      ++comparisons;
      const Verdict v = cmp_gamma(g, h);
      if (v != Verdict::Less) {
        ++viol;
        if (!check.witness) {
          check.status = Status::Counterexample;
          check.witness =
              Witness{"condition_viii_lower",
                      {{"g", to_json(g)}, {"h", to_json(h)}},
                      {{"cmp_g_h", to_string(v)}}};
        }
      }
    }
    for (const ConjugationSign sign :
         {ConjugationSign::PositiveLeft, ConjugationSign::NegativeLeft}) {
      for (int n = -n_range; n <= n_range; ++n) {
        ++comparisons;
        const GammaElement conj = conjugate_family('t', n, sign);
        const Verdict v = cmp_gamma(h, conj);
        if (v != Verdict::Less) {
          ++viol;
          if (!check.witness) {
            check.status = Status::Counterexample;
            check.witness = Witness{
                "condition_viii_upper",
                {{"h", to_json(h)}, {"conjugate", to_json(conj)}},
                {{"n", n},
                 {"sign",
                  sign == ConjugationSign::PositiveLeft ? "t^n b t^-n"
                                                        : "t^-n b t^n"},
                 {"cmp_h_conj", to_string(v)}}};
          }
        }
      }
    }
    check.detail = {{"g_ball_size", static_cast<long>(gball.size())},
                    {"n_range", n_range},
                    {"comparisons", comparisons},
                    {"violations", viol}};
    report.checks.push_back(std::move(check));
  }

  return report;
}

// ------------------------------------------------------------- cofinality

AuditReport audit_cofinality(const std::vector<GammaElement>& ball_elems,
                             int n_max) {
  AuditReport report{"cofinality", {}};
  const GammaElement b = GammaElement::gen_b();

  {
    AuditCheck check{"b_translation_increases"};
    long viol = 0;
    for (const GammaElement& g : ball_elems) {
      const Verdict v = cmp_gamma(g, b * g);
      if (v != Verdict::Less) {
        ++viol;
        if (!check.witness) {
          check.status = Status::Counterexample;
          check.witness = Witness{"b_translation",
                                  {{"g", to_json(g)}},
                                  {{"cmp_g_bg", to_string(v)}}};
        }
      }
    }
    check.detail = {{"elements", static_cast<long>(ball_elems.size())},
                    {"violations", viol}};
    report.checks.push_back(std::move(check));
  }

  {
    AuditCheck check{"cofinality_bounds"};
    const auto encloses = [](const GammaElement& g, long n) {
      const GammaElement bp(BSElement::identity(),
                            OmegaElement::delta(0, Radical(n)));
      return cmp_gamma(bp.inverse(), g) == Verdict::Less &&
             cmp_gamma(g, bp) == Verdict::Less;
    };
    long max_bound = 0, unbounded = 0;
    for (const GammaElement& g : ball_elems) {
      // exponential search for an enclosing power, then binary search
      // for the minimal one (the predicate is monotone in n)
      long hi = 1;
      while (hi <= n_max && !encloses(g, hi)) hi *= 2;
      if (hi > n_max) {
        ++unbounded;
        if (!check.witness) {
          check.status = Status::Fail;
          check.witness = Witness{
              "cofinality",
              {{"g", to_json(g)}},
              {{"n_max", n_max},
               {"omega_sum", g.omega().sum().to_string()}}};
        }
        continue;
      }
      long lo = hi / 2;  // !encloses(g, lo) whenever lo >= 1
      while (hi - lo > 1) {
        const long mid = lo + (hi - lo) / 2;
        (encloses(g, mid) ? hi : lo) = mid;
      }
      if (hi > max_bound) max_bound = hi;
    }
    check.detail = {{"elements", static_cast<long>(ball_elems.size())},
                    {"n_max", n_max},
                    {"max_bound", max_bound},
                    {"unbounded", unbounded}};
    report.checks.push_back(std::move(check));
  }

  return report;
}

// -------------------------------------------------------------- relations

AuditReport audit_relations(ShiftConvention conv, int ij_range) {
  AuditReport report{"relations", {}};
  const GammaElement t = GammaElement::gen_t();
  const GammaElement a = GammaElement::gen_a();
  const GammaElement b = GammaElement::gen_b();

  {
    AuditCheck check{"relation_iii_normal_form"};
    const BSElement lhs =
        BSElement::t_power(1) * BSElement::a_power(Dyadic(1)) *
        BSElement::t_power(-1);
    const BSElement rhs = BSElement::a_power(Dyadic(2));
    if (lhs != rhs) check.status = Status::Fail;
    check.detail = {{"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}};
    report.checks.push_back(std::move(check));
  }

  {
    AuditCheck check{"relation_iii_gamma"};
    if (t * a * t.inverse() != a * a) check.status = Status::Fail;
    report.checks.push_back(std::move(check));
  }

  {
    // Compose the generator actions t . a . t^-1 on the basis vectors
    // delta_n and compare with a^2 (and, on mismatch, with a^(1/2)).
    AuditCheck check{"relation_iii_action"};
    const char* conv_name =
        conv == ShiftConvention::RelationFixed ? "relation-fixed"
                                               : "paper-literal";
    bool all_squared = true, all_half = true;
    Json first_mismatch;
    for (int n = -4; n <= 4; ++n) {
      const OmegaElement x = OmegaElement::delta(n, Radical(1));
      const OmegaElement lhs = apply_t_shift(
          apply_a_power(apply_t_shift(x, -1, conv), Dyadic(1)), 1, conv);
      const OmegaElement squared = apply_a_power(x, Dyadic(2));
      const OmegaElement half = apply_a_power(x, Dyadic(1, 1));
      if (lhs != squared) {
        all_squared = false;
        if (first_mismatch.is_null()) {
          first_mismatch = {{"basis_index", n},
                            {"lhs", to_json(lhs)},
                            {"a_squared", to_json(squared)},
                            {"a_half", to_json(half)}};
        }
      }
      if (lhs != half) all_half = false;
    }
    check.detail = {{"convention", conv_name},
                    {"acts_as", all_squared ? "a^2"
                                : all_half  ? "a^(1/2)"
                                            : "neither"}};
    if (!all_squared) {
      check.status = Status::Counterexample;
      check.witness = Witness{
          "relation_discrepancy",
          {{"x", to_json(embed_omega(OmegaElement::delta(
                     first_mismatch.at("basis_index").get<int>(),
                     Radical(1))))}},
          {{"convention", conv_name},
           {"acts_as", all_half ? "a^(1/2)" : "neither"},
           {"basis_index", first_mismatch.at("basis_index")},
           {"lhs", first_mismatch.at("lhs")},
           {"a_squared", first_mismatch.at("a_squared")},
           {"a_half", first_mismatch.at("a_half")}}};
    }
    report.checks.push_back(std::move(check));
  }

  {
    AuditCheck check{"relation_iv_gamma"};
    if (a * b * a.inverse() != b * b) check.status = Status::Fail;
    report.checks.push_back(std::move(check));
  }

  {
    AuditCheck check{"relation_v_commuting_conjugates"};
    long cases = 0, viol = 0;
    for (int i = -ij_range; i <= ij_range; ++i) {
      for (int j = -ij_range; j <= ij_range; ++j) {
        ++cases;
        const GammaElement ti =
            conjugate_family('t', i, ConjugationSign::PositiveLeft);
        const GammaElement aj =
            conjugate_family('a', j, ConjugationSign::PositiveLeft);
        if (!gamma_comm(ti, aj).is_identity()) {
          ++viol;
          if (!check.witness) {
            check.status = Status::Fail;
            check.witness = Witness{
                "commuting_conjugates",
                {{"left", to_json(ti)}, {"right", to_json(aj)}},
                {{"i", i}, {"j", j}}};
          }
        }
      }
    }
    check.detail = {{"cases", cases}, {"violations", viol}};
    report.checks.push_back(std::move(check));
  }

  return report;
}

// ---------------------------------------------------------- derived series

AuditReport derived_certificate() {
  AuditReport report{"derived_certificate", {}};
  const GammaElement t = GammaElement::gen_t();
  const GammaElement a = GammaElement::gen_a();
  const GammaElement b = GammaElement::gen_b();

  const auto equality_check = [&](const char* name, const GammaElement& lhs,
                                  const GammaElement& rhs) {
    AuditCheck check{name};
    if (lhs != rhs) check.status = Status::Fail;
    check.detail = {{"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}};
    report.checks.push_back(std::move(check));
  };

  equality_check("comm_t_a_equals_a", gamma_comm(t, a), a);
  equality_check("comm_a_b_equals_b", gamma_comm(a, b), b);
  // b as a commutator of two first-derived elements: [[t,a],[a,b]] = b.
  equality_check("b_in_second_derived",
                 gamma_comm(gamma_comm(t, a), gamma_comm(a, b)), b);

  AuditCheck nontrivial{"b_nontrivial"};
  if (b.is_identity()) nontrivial.status = Status::Fail;
  report.checks.push_back(std::move(nontrivial));

  return report;
}

// ------------------------------------------------------------- solvability

AuditReport sample_solvability(int level, int count, std::uint64_t seed,
                               const std::vector<GammaElement>& pool) {
  if (level < 1 || level > 3)
    throw std::invalid_argument("solvability level must be 1, 2 or 3");
  if (pool.empty()) throw std::invalid_argument("empty sample pool");
  AuditReport report{"solvability_level" + std::to_string(level), {}};

  SplitMix64 rng(seed);
  const auto pick = [&]() -> const GammaElement& {
    return pool[rng.bounded(pool.size())];
  };
  // Nested commutator with 2^level leaves.
  const auto nested = [&](auto&& self, int lvl) -> GammaElement {
    if (lvl == 1) return gamma_comm(pick(), pick());
    return gamma_comm(self(self, lvl - 1), self(self, lvl - 1));
  };

  AuditCheck check{"level" + std::to_string(level) + "_sampled_commutators"};
  long identity_count = 0;
  std::optional<GammaElement> nonidentity;
  for (int i = 0; i < count; ++i) {
    GammaElement c = nested(nested, level);
    if (c.is_identity()) {
      ++identity_count;
    } else if (!nonidentity) {
      nonidentity = std::move(c);
    }
  }
  check.detail = {{"level", level},
                  {"samples", count},
                  {"identity_count", identity_count}};
  if (level == 3 && identity_count != count) {
    check.status = Status::Counterexample;
    check.witness = Witness{"solvability_level3",
                            {{"commutator", to_json(*nonidentity)}},
                            {{"expected", "identity"}}};
  }
  report.checks.push_back(std::move(check));
  return report;
}

// ------------------------------------------------------------------ replay

bool replay_witness(const Witness& w) {
  try {
    const Json& e = w.elements;
    const Json& d = w.details;

    if (w.property == "swap_consistency" || w.property == "antisymmetry" ||
        w.property == "transitivity") {
      const OrderKind kind =
          order_kind_from_string(d.at("order").get<std::string>());
      const GammaElement x = gamma_from_json(e.at("x"));
      const GammaElement y = gamma_from_json(e.at("y"));
      const Verdict xy = cmp_by_kind(kind, x, y);
      if (to_string(xy) != d.at("cmp_xy").get<std::string>()) return false;
      if (w.property == "swap_consistency") {
        const Verdict yx = cmp_by_kind(kind, y, x);
        return to_string(yx) == d.at("cmp_yx").get<std::string>() &&
               yx != reverse(xy);
      }
      if (w.property == "antisymmetry")
        return xy == Verdict::Equal && !projections_equal(kind, x, y);
      const GammaElement z = gamma_from_json(e.at("z"));
      const Verdict yz = cmp_by_kind(kind, y, z);
      const Verdict xz = cmp_by_kind(kind, x, z);
      return to_string(yz) == d.at("cmp_yz").get<std::string>() &&
             to_string(xz) == d.at("cmp_xz").get<std::string>() &&
             !transitive_ok(xy, yz, xz);
    }

    if (w.property == "translation_invariance") {
      const OmegaElement x = gamma_from_json(e.at("x")).omega();
      const OmegaElement y = gamma_from_json(e.at("y")).omega();
      const OmegaElement z = gamma_from_json(e.at("z")).omega();
      const Verdict before = cmp_omega(x, y);
      const Verdict after = cmp_omega(x + z, y + z);
      return to_string(before) == d.at("before").get<std::string>() &&
             to_string(after) == d.at("after").get<std::string>() &&
             before != after;
    }

    if (w.property == "left_invariance") {
      const OrderKind kind =
          order_kind_from_string(d.at("order").get<std::string>());
      const GammaElement f = gamma_from_json(e.at("f"));
      const GammaElement g = gamma_from_json(e.at("g"));
      const GammaElement h = gamma_from_json(e.at("h"));
      const Verdict before = cmp_by_kind(kind, g, h);
      const Verdict after = cmp_by_kind(kind, f * g, f * h);
      return to_string(before) == d.at("cmp_g_h").get<std::string>() &&
             to_string(after) == d.at("cmp_fg_fh").get<std::string>() &&
             before != after;
    }

    if (w.property == "action_preservation") {
      const std::string gen = d.at("generator").get<std::string>();
      const OmegaElement x = gamma_from_json(e.at("x")).omega();
      const OmegaElement y = gamma_from_json(e.at("y")).omega();
      const Verdict xy = cmp_omega(x, y);
      const Verdict img = cmp_omega(apply_named_generator(gen, x),
                                    apply_named_generator(gen, y));
      return to_string(xy) == d.at("cmp_x_y").get<std::string>() &&
             to_string(img) == d.at("cmp_sx_sy").get<std::string>() &&
             xy == Verdict::Less && img != Verdict::Less;
    }

    if (w.property == "subgroup_domination") {
      const GammaElement g = gamma_from_json(e.at("g"));
      const GammaElement f = gamma_from_json(e.at("f"));
      const std::string cond = d.at("condition").get<std::string>();
      const bool member =
          cond == "condition_vi" ? in_c(g) && !in_c(f) : in_g(g) && !in_g(f);
      const Verdict v = cmp_gamma(g, f);
      return member &&
             cmp_gamma(GammaElement::identity(), f) == Verdict::Less &&
             to_string(v) == d.at("cmp_g_f").get<std::string>() &&
             v != Verdict::Less;
    }

    if (w.property == "condition_viii_lower") {
      const GammaElement g = gamma_from_json(e.at("g"));
      const GammaElement h = gamma_from_json(e.at("h"));
      const Verdict v = cmp_gamma(g, h);
      return to_string(v) == d.at("cmp_g_h").get<std::string>() &&
             v != Verdict::Less;
    }

    if (w.property == "condition_viii_upper") {
      const GammaElement h = gamma_from_json(e.at("h"));
      const GammaElement conj = gamma_from_json(e.at("conjugate"));
      const Verdict v = cmp_gamma(h, conj);
      return to_string(v) == d.at("cmp_h_conj").get<std::string>() &&
             v != Verdict::Less;
    }

    if (w.property == "b_translation") {
      const GammaElement g = gamma_from_json(e.at("g"));
      const Verdict v = cmp_gamma(g, GammaElement::gen_b() * g);
      return to_string(v) == d.at("cmp_g_bg").get<std::string>() &&
             v != Verdict::Less;
    }

    if (w.property == "cofinality") {
      const GammaElement g = gamma_from_json(e.at("g"));
      const long n_max = d.at("n_max").get<long>();
      // enclosure is monotone in n, so checking the cap suffices
      const GammaElement bp(BSElement::identity(),
                            OmegaElement::delta(0, Radical(n_max)));
      return !(cmp_gamma(bp.inverse(), g) == Verdict::Less &&
               cmp_gamma(g, bp) == Verdict::Less);
    }

    if (w.property == "relation_discrepancy") {
      const std::string conv_name = d.at("convention").get<std::string>();
      const ShiftConvention conv = conv_name == "paper-literal"
                                       ? ShiftConvention::PaperLiteral
                                       : ShiftConvention::RelationFixed;
      const OmegaElement x = gamma_from_json(e.at("x")).omega();
      const OmegaElement lhs = apply_t_shift(
          apply_a_power(apply_t_shift(x, -1, conv), Dyadic(1)), 1, conv);
      const OmegaElement squared = apply_a_power(x, Dyadic(2));
      if (lhs == squared) return false;
      if (d.at("acts_as").get<std::string>() == "a^(1/2)")
        return lhs == apply_a_power(x, Dyadic(1, 1));
      return true;
    }

    if (w.property == "solvability_level3") {
      const GammaElement c = gamma_from_json(e.at("commutator"));
      return !c.is_identity();
    }

    return false;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace bsomega
