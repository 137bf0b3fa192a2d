#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bsomega/realization.hpp"
#include "bsomega/word_parser.hpp"

using namespace bsomega;

namespace {
using Status = AuditCheck::Status;
}

TEST_CASE("radius 1 embedding") {
  const RealizedBall rb = build_embedding(1);
  REQUIRE(rb.elements().size() == 7);
  CHECK(rb.phi(GammaElement::identity()) == 0);
  const long pt = rb.phi(GammaElement::gen_t());
  const long pa = rb.phi(GammaElement::gen_a());
  const long pb = rb.phi(GammaElement::gen_b());
  CHECK(pt == 1);
  CHECK(pa == 2);
  CHECK(pb == 3);
  CHECK(rb.phi(GammaElement::gen_b().inverse()) == -3);
  // positive elements sit at positive coordinates
  for (const GammaElement& g : rb.elements()) {
    if (cmp_gamma(GammaElement::identity(), g) == Verdict::Less)
      CHECK(rb.phi(g) > 0);
  }
  CHECK_THROWS_AS(rb.phi(parse_word("t t")), std::invalid_argument);
  CHECK_THROWS_AS(build_embedding(0), std::invalid_argument);
}

TEST_CASE("phi is strictly order preserving") {
  for (int radius = 1; radius <= 4; ++radius) {
    const RealizedBall rb = build_embedding(radius);
    const auto& els = rb.elements();
    for (std::size_t i = 0; i + 1 < els.size(); ++i) {
      CHECK(cmp_gamma(els[i], els[i + 1]) == Verdict::Less);
      CHECK(rb.coord(i) < rb.coord(i + 1));
    }
  }
}

TEST_CASE("realized generator maps") {
  const RealizedBall rb = build_embedding(3);

  const PLMap mb = realize_generator('b', rb);
  CHECK(mb.monotone);
  for (const auto& [in, out] : mb.breakpoints) CHECK(out > in);

  const PLMap mt = realize_generator('t', rb);
  CHECK(mt.monotone);  // t-translation preserves < on the whole group

  // a is already non-monotone at radius 3: g = t^-1 b < h = b flips
  // (ties at sum 1, index tie-break; images have sums 4 > 2).
  const PLMap ma = realize_generator('a', rb);
  CHECK_FALSE(ma.monotone);
  REQUIRE(ma.first_inversion.has_value());
  const GammaElement g = parse_word("T b");
  const GammaElement h = parse_word("b");
  const GammaElement A = GammaElement::gen_a();
  CHECK(cmp_gamma(g, h) == Verdict::Less);
  CHECK(cmp_gamma(A * g, A * h) == Verdict::Greater);
  CHECK(rb.contains(A * g));
  CHECK(rb.contains(A * h));
}

TEST_CASE("PLMap evaluation") {
  PLMap m;
  m.breakpoints = {{-2, -3}, {0, 0}, {4, 6}};
  CHECK(m.eval(mpq_class(-2)) == -3);
  CHECK(m.eval(mpq_class(0)) == 0);
  CHECK(m.eval(mpq_class(4)) == 6);
  CHECK(m.eval(mpq_class(-1)) == mpq_class(-3, 2));  // midpoint
  CHECK(m.eval(mpq_class(2)) == 3);
  CHECK(m.eval(mpq_class(-10)) == -11);  // identity-plus-constant tails
  CHECK(m.eval(mpq_class(10)) == 12);
}

TEST_CASE("composition coherence with group multiplication") {
  const RealizedBall rb = build_embedding(3);
  const GammaElement t = GammaElement::gen_t();
  const GammaElement b = GammaElement::gen_b();
  const PLMap mt = realize_generator('t', rb);
  const PLMap mb = realize_generator('b', rb);
  long checked = 0;
  for (const GammaElement& g : rb.elements()) {
    const GammaElement bg = b * g;
    const GammaElement tbg = t * bg;
    if (!rb.contains(bg) || !rb.contains(tbg)) continue;
    ++checked;
    const mpq_class via_maps = mt.eval(mb.eval(mpq_class(rb.phi(g))));
    CHECK(via_maps == mpq_class(rb.phi(tbg)));
  }
  CHECK(checked > 10);
}

TEST_CASE("c2 and c3 reports") {
  const RealizedBall rb = build_embedding(4);
  const AuditReport c2 = check_c2(rb);
  CHECK(c2.all_pass());
  REQUIRE(c2.find("c2_sandwich") != nullptr);
  CHECK(c2.find("c2_sandwich")->detail.at("violations").get<long>() == 0);

  const AuditReport c3 = check_c3(rb);
  CHECK(c3.all_pass());
  const AuditCheck* fixed = c3.find("no_common_fixed_point");
  REQUIRE(fixed != nullptr);
  CHECK(fixed->detail.at("jointly_fixed").get<long>() == 0);
  const mpq_class min_disp(
      fixed->detail.at("min_joint_displacement").get<std::string>());
  CHECK(min_disp > 0);
}

TEST_CASE("freeness report") {
  const AuditReport r = freeness_report(ball(4), 64, 4);
  CHECK(r.all_pass());
  REQUIRE(r.find("realized_b_above_diagonal") != nullptr);
  CHECK(r.find("realized_b_above_diagonal")->detail.at("monotone")
            .get<bool>());
}

TEST_CASE("artifact determinism") {
  const Json a1 = realization_artifact(3, 64);
  const Json a2 = realization_artifact(3, 64);
  CHECK(a1.dump() == a2.dump());
  CHECK(a1.at("ball_size").get<long>() ==
        static_cast<long>(ball(3).size()));
  for (const char* gen : {"t", "a", "b"}) {
    CHECK(a1.at("generators").at(gen).contains("breakpoints"));
    CHECK(a1.at("generators").at(gen).contains("monotone"));
  }
}

TEST_CASE("number line rendering") {
  const RealizedBall rb = build_embedding(1);
  const std::string line = rb.render_number_line();
  CHECK(line.find("0 | 1") != std::string::npos);
  CHECK(line.find("3 | b") != std::string::npos);
  CHECK(line.find("-3 | b^-1") != std::string::npos);
}
