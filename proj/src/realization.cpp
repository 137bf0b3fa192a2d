#include "bsomega/realization.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "bsomega/audits.hpp"

namespace bsomega {

RealizedBall::RealizedBall(int radius, std::vector<GammaElement> sorted)
    : radius_(radius), elements_(std::move(sorted)) {
  std::size_t id_rank = elements_.size();
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    rank_.emplace(elements_[i], i);
    if (elements_[i].is_identity()) id_rank = i;
  }
  if (id_rank == elements_.size())
    throw std::logic_error("RealizedBall: identity not present");
  coords_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i)
    coords_[i] = static_cast<long>(i) - static_cast<long>(id_rank);
}

bool RealizedBall::contains(const GammaElement& g) const {
  return rank_.count(g) != 0;
}

long RealizedBall::phi(const GammaElement& g) const {
  auto it = rank_.find(g);
  if (it == rank_.end())
    throw std::invalid_argument("phi: element not realized");
  return coords_[it->second];
}

Json RealizedBall::to_json() const {
  Json arr = Json::array();
  for (std::size_t i = 0; i < elements_.size(); ++i)
    arr.push_back({{"element", bsomega::to_json(elements_[i])},
                   {"coord", coords_[i]}});
  return arr;
}

std::string RealizedBall::render_number_line() const {
  std::string out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const std::string word = elements_[i].to_word();
    out += std::to_string(coords_[i]) + " | " +
           (word.empty() ? "1" : word) + "\n";
  }
  return out;
}

RealizedBall build_embedding(int radius, std::size_t budget) {
  if (radius < 1) throw std::invalid_argument("radius must be >= 1");
  return RealizedBall(radius, ball(radius, budget));
}

mpq_class PLMap::eval(const mpq_class& x) const {
  if (breakpoints.empty()) return x;
  const auto& front = breakpoints.front();
  const auto& back = breakpoints.back();
  if (x <= front.first) return x + (front.second - front.first);
  if (x >= back.first) return x + (back.second - back.first);
  // invariant: front.first < x < back.first
  std::size_t lo = 0, hi = breakpoints.size() - 1;
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (mpq_class(breakpoints[mid].first) <= x)
      lo = mid;
    else
      hi = mid;
  }
  const auto& [x0, y0] = breakpoints[lo];
  const auto& [x1, y1] = breakpoints[hi];
  return mpq_class(y0) +
         mpq_class(y1 - y0) * (x - mpq_class(x0)) / mpq_class(x1 - x0);
}

Json PLMap::to_json() const {
  Json bps = Json::array();
  for (const auto& [in, out] : breakpoints)
    bps.push_back(Json::array({in, out}));
  return {{"breakpoints", bps}, {"monotone", monotone}};
}

PLMap realize_generator(char s, const RealizedBall& ball) {
  GammaElement gen;
  switch (s) {
    case 't': gen = GammaElement::gen_t(); break;
    case 'a': gen = GammaElement::gen_a(); break;
    case 'b': gen = GammaElement::gen_b(); break;
    default: throw std::invalid_argument("generator must be t, a or b");
  }
  PLMap map;
  map.generator = s;
  std::vector<std::size_t> ranks;  // ranks of the g with sg realized
  for (std::size_t i = 0; i < ball.elements().size(); ++i) {
    const GammaElement sg = gen * ball.elements()[i];
    if (!ball.contains(sg)) continue;
    map.breakpoints.emplace_back(ball.coord(i), ball.phi(sg));
    ranks.push_back(i);
  }
  // inputs ascend by construction; flag any output inversion
  for (std::size_t i = 0; i + 1 < map.breakpoints.size(); ++i) {
    if (map.breakpoints[i].second >= map.breakpoints[i + 1].second) {
      map.monotone = false;
      map.first_inversion = {ranks[i], ranks[i + 1]};
      break;
    }
  }
  return map;
}

AuditReport check_c2(const RealizedBall& ball) {
  AuditReport report{"realized_c2", {}};
  AuditCheck check{"c2_sandwich"};

  const GammaElement a = GammaElement::gen_a();
  const GammaElement b = GammaElement::gen_b();
  const GammaElement h = gamma_conj(a.inverse(), b);
  if (!ball.contains(h)) {
    check.status = AuditCheck::Status::Fail;
    check.detail = {{"error", "ball too small to realize a^-1 b a"}};
    report.checks.push_back(std::move(check));
    return report;
  }
  const long phi_h = ball.phi(h);

  long comparisons = 0, violations = 0;
  for (const GammaElement& g : ball.elements()) {
    if (!in_g(g)) continue;
    ++comparisons;
    if (ball.phi(g) >= phi_h) {
      ++violations;
      if (!check.witness) {
        check.status = AuditCheck::Status::Counterexample;
        check.witness = Witness{"condition_viii_lower",
                                {{"g", to_json(g)}, {"h", to_json(h)}},
                                {{"cmp_g_h", to_string(cmp_gamma(g, h))}}};
      }
    }
  }
  long realized_n = 0;
  for (int n = -ball.radius(); n <= ball.radius(); ++n) {
    const GammaElement conj =
        conjugate_family('t', n, ConjugationSign::PositiveLeft);
    if (!ball.contains(conj)) continue;
    ++realized_n;
    ++comparisons;
    if (phi_h >= ball.phi(conj)) {
      ++violations;
      if (!check.witness) {
        check.status = AuditCheck::Status::Counterexample;
        check.witness =
            Witness{"condition_viii_upper",
                    {{"h", to_json(h)}, {"conjugate", to_json(conj)}},
                    {{"n", n},
                     {"sign", "t^n b t^-n"},
                     {"cmp_h_conj", to_string(cmp_gamma(h, conj))}}};
      }
    }
  }
  check.detail = {{"phi_h", phi_h},
                  {"comparisons", comparisons},
                  {"realized_conjugates", realized_n},
                  {"violations", violations}};
  report.checks.push_back(std::move(check));
  return report;
}

AuditReport check_c3(const RealizedBall& ball) {
  AuditReport report{"realized_c3", {}};

  {
    // t g != g for every g, exactly (the t-exponent increments).
    AuditCheck check{"t_moves_every_element"};
    const GammaElement t = GammaElement::gen_t();
    long viol = 0;
    for (const GammaElement& g : ball.elements())
      if (t * g == g) ++viol;
    if (viol > 0) check.status = AuditCheck::Status::Fail;
    check.detail = {{"elements", static_cast<long>(ball.elements().size())},
                    {"violations", viol}};
    report.checks.push_back(std::move(check));
  }

  {
    AuditCheck check{"basepoint_moved_by_b"};
    const long phi_b = ball.phi(GammaElement::gen_b());
    if (phi_b <= 0) check.status = AuditCheck::Status::Fail;
    check.detail = {{"phi_b", phi_b}};
    report.checks.push_back(std::move(check));
  }

  {
    // Joint displacement over the breakpoint-and-midpoint grid.
    AuditCheck check{"no_common_fixed_point"};
    const PLMap mt = realize_generator('t', ball);
    const PLMap ma = realize_generator('a', ball);
    const PLMap mb = realize_generator('b', ball);

    std::set<mpq_class> grid;
    for (const PLMap* m : {&mt, &ma, &mb})
      for (const auto& [in, out] : m->breakpoints) grid.insert(mpq_class(in));
    std::vector<mpq_class> points(grid.begin(), grid.end());
    const std::size_t n = points.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
      points.push_back((points[i] + points[i + 1]) / 2);

    bool have_min = false;
    mpq_class min_disp;
    long fixed_points = 0;
    for (const mpq_class& p : points) {
      mpq_class disp(0);
      for (const PLMap* m : {&mt, &ma, &mb})
        disp = std::max(disp, mpq_class(abs(m->eval(p) - p)));
      if (disp == 0) ++fixed_points;
      if (!have_min || disp < min_disp) {
        min_disp = disp;
        have_min = true;
      }
    }
    if (fixed_points > 0) check.status = AuditCheck::Status::Counterexample;
    check.detail = {{"grid_points", static_cast<long>(points.size())},
                    {"jointly_fixed", fixed_points},
                    {"min_joint_displacement", min_disp.get_str()}};
    report.checks.push_back(std::move(check));
  }

  return report;
}

AuditReport freeness_report(const std::vector<GammaElement>& ball_elems,
                            int n_max, int realize_radius) {
  AuditReport cof = audit_cofinality(ball_elems, n_max);
  AuditReport report{"freeness", {}};
  for (AuditCheck& c : cof.checks) report.checks.push_back(std::move(c));

  AuditCheck check{"realized_b_above_diagonal"};
  const RealizedBall rb = build_embedding(realize_radius);
  const PLMap mb = realize_generator('b', rb);
  const GammaElement b = GammaElement::gen_b();
  long breakpoints = 0, viol = 0;
  for (std::size_t i = 0; i < rb.elements().size(); ++i) {
    const GammaElement& g = rb.elements()[i];
    const GammaElement bg = b * g;
    if (!rb.contains(bg)) continue;
    ++breakpoints;
    if (rb.phi(bg) <= rb.coord(i)) {
      ++viol;
      if (!check.witness) {
        check.status = AuditCheck::Status::Counterexample;
        check.witness =
            Witness{"b_translation",
                    {{"g", to_json(g)}},
                    {{"cmp_g_bg", to_string(cmp_gamma(g, bg))}}};
      }
    }
  }
  check.detail = {{"radius", realize_radius},
                  {"breakpoints", breakpoints},
                  {"monotone", mb.monotone},
                  {"violations", viol}};
  report.checks.push_back(std::move(check));
  return report;
}

Json realization_artifact(int radius, int n_max, std::size_t budget) {
  const RealizedBall rb = build_embedding(radius, budget);
  const PLMap mt = realize_generator('t', rb);
  const PLMap ma = realize_generator('a', rb);
  const PLMap mb = realize_generator('b', rb);
  Json reports = Json::array();
  reports.push_back(check_c2(rb).to_json());
  reports.push_back(check_c3(rb).to_json());
  reports.push_back(
      freeness_report(rb.elements(), n_max, radius).to_json());
  return {{"radius", radius},
          {"ball_size", static_cast<long>(rb.elements().size())},
          {"elements", rb.to_json()},
          {"generators",
           {{"t", mt.to_json()}, {"a", ma.to_json()}, {"b", mb.to_json()}}},
          {"reports", reports}};
}

}  // namespace bsomega
