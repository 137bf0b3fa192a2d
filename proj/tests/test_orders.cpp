#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bsomega/ball.hpp"
#include "bsomega/orders.hpp"
#include "bsomega/word_parser.hpp"
#include "test_support.hpp"

using namespace bsomega;

namespace {
const GammaElement t = GammaElement::gen_t();
const GammaElement a = GammaElement::gen_a();
const GammaElement b = GammaElement::gen_b();
const GammaElement one = GammaElement::identity();

OmegaElement delta(long n, const Radical& v) {
  return OmegaElement::delta(mpz_class(n), v);
}
}  // namespace

TEST_CASE("omega order: sums first") {
  CHECK(cmp_omega({}, {}) == Verdict::Equal);
  CHECK(cmp_omega({}, b.omega()) == Verdict::Less);          // 0 < 1
  CHECK(cmp_omega(delta(0, Radical(Dyadic(1, 1))), delta(-3, Radical(1))) ==
        Verdict::Less);                                      // 1/2 < 1
  const OmegaElement x = delta(0, Radical(1)) + delta(1, Radical(-1));
  CHECK(x.sum().is_zero());
  // sums tie at 0; first differing index 0 has 1 > 0
  CHECK(cmp_omega(x, {}) == Verdict::Greater);
  CHECK(cmp_omega({}, x) == Verdict::Less);
}

TEST_CASE("omega order tie-break equals the two-min formulation") {
  // min{k : x_k < y_k} < min{k : y_k < x_k} on sum-equal pairs.
  SplitMix64 rng(41);
  const std::vector<GammaElement> pool = ball(3);
  int ties = 0;
  for (int i = 0; i < 4000; ++i) {
    const OmegaElement x = pool[rng.bounded(pool.size())].omega();
    const OmegaElement y = pool[rng.bounded(pool.size())].omega();
    if (x == y || Radical::cmp(x.sum(), y.sum()) != 0) continue;
    ++ties;
    mpz_class min_x_lt_y, min_y_lt_x;
    bool has_xy = false, has_yx = false;
    auto scan = [&](const OmegaElement& p, const OmegaElement& q,
                    mpz_class& out, bool& has) {
      std::set<mpz_class> indices;
      for (const auto& [n, v] : p.support()) indices.insert(n);
      for (const auto& [n, v] : q.support()) indices.insert(n);
      for (const mpz_class& n : indices) {
        if (Radical::cmp(p.coord(n), q.coord(n)) < 0) {
          out = n;
          has = true;
          return;
        }
      }
    };
    scan(x, y, min_x_lt_y, has_xy);
    scan(y, x, min_y_lt_x, has_yx);
    REQUIRE(has_xy);
    REQUIRE(has_yx);
    const Verdict expect =
        min_x_lt_y < min_y_lt_x ? Verdict::Less : Verdict::Greater;
    CHECK(cmp_omega(x, y) == expect);
  }
  CHECK(ties > 50);  // the pool produces plenty of sum ties
}

TEST_CASE("bs order") {
  CHECK(cmp_bs(BSElement::identity(), t.bs()) == Verdict::Less);
  CHECK(cmp_bs(t.bs(), a.bs()) == Verdict::Less);
  CHECK(cmp_bs(a.bs(), a.bs()) == Verdict::Equal);
  // dominant coordinate is the left-form a-exponent u * 2^k
  const BSElement ta_half(mpz_class(1), Dyadic(1, 1));  // t a^(1/2) = a t
  CHECK(cmp_bs(a.bs(), ta_half) == Verdict::Less);      // 1 = 1, k 0 < 1
}

TEST_CASE("gamma order") {
  CHECK(cmp_gamma(one, t) == Verdict::Less);
  CHECK(cmp_gamma(t, a) == Verdict::Less);
  CHECK(cmp_gamma(a, b) == Verdict::Less);
  CHECK(cmp_gamma(b, b) == Verdict::Equal);
  const GammaElement h = parse_word("A b a");
  for (int n = -4; n <= 4; ++n) {
    for (const auto sign :
         {ConjugationSign::PositiveLeft, ConjugationSign::NegativeLeft}) {
      CHECK(cmp_gamma(h, conjugate_family('t', n, sign)) == Verdict::Less);
    }
  }
}

TEST_CASE("extension order combinator") {
  const auto cmp_first = [](int x, int y) { return verdict_of_int((x > y) - (x < y)); };
  const auto ext = extension_order(cmp_first, cmp_first);
  using P = std::pair<int, int>;
  CHECK(ext(P{1, 2}, P{1, 2}) == Verdict::Equal);
  CHECK(ext(P{9, 1}, P{0, 2}) == Verdict::Less);     // second dominates
  CHECK(ext(P{0, 5}, P{9, 2}) == Verdict::Greater);  // second dominates
  CHECK(ext(P{1, 3}, P{2, 3}) == Verdict::Less);     // tie -> first decides
}

TEST_CASE("translation invariance of the omega order") {
  SplitMix64 rng(42);
  const std::vector<GammaElement> pool = ball(3);
  for (int i = 0; i < 2000; ++i) {
    const OmegaElement x = pool[rng.bounded(pool.size())].omega();
    const OmegaElement y = pool[rng.bounded(pool.size())].omega();
    const OmegaElement z = pool[rng.bounded(pool.size())].omega();
    CHECK(cmp_omega(x, y) == cmp_omega(x + z, y + z));
  }
}

TEST_CASE("the omega verdict dominates the gamma order") {
  SplitMix64 rng(44);
  const std::vector<GammaElement> pool = ball(3);
  for (int i = 0; i < 1000; ++i) {
    const GammaElement& g = pool[rng.bounded(pool.size())];
    const GammaElement& h = pool[rng.bounded(pool.size())];
    const Verdict omega = cmp_omega(g.omega(), h.omega());
    if (omega != Verdict::Equal) CHECK(cmp_gamma(g, h) == omega);
  }
}

TEST_CASE("swap consistency and reflexivity for all comparators") {
  SplitMix64 rng(43);
  const std::vector<GammaElement> pool = ball(3);
  for (int i = 0; i < 1000; ++i) {
    const GammaElement& g = pool[rng.bounded(pool.size())];
    const GammaElement& h = pool[rng.bounded(pool.size())];
    CHECK(cmp_gamma(g, g) == Verdict::Equal);
    CHECK(cmp_gamma(g, h) == reverse(cmp_gamma(h, g)));
    CHECK(cmp_bs(g.bs(), h.bs()) == reverse(cmp_bs(h.bs(), g.bs())));
    CHECK(cmp_omega(g.omega(), h.omega()) ==
          reverse(cmp_omega(h.omega(), g.omega())));
  }
}

TEST_CASE("b left-translation strictly increases the ball") {
  const GammaElement binv = b.inverse();
  for (const GammaElement& g : ball(3)) {
    CHECK(cmp_gamma(g, b * g) == Verdict::Less);
    CHECK(cmp_gamma(binv * g, g) == Verdict::Less);  // the mirror image
  }
  CHECK(cmp_gamma(one, b) == Verdict::Less);  // b * 1 = b > 1
}

TEST_CASE("left invariance fails for < at the derived triple") {
  // f = a, g = (1, delta_1 * 7/8), h = (1, delta_0 * 1):
  // g < h by sums 7/8 < 1, but a h < a g by sums 2 < 7/2.
  const GammaElement g(BSElement::identity(),
                       delta(1, Radical(Dyadic(7, 3))));
  const GammaElement h(BSElement::identity(), delta(0, Radical(1)));
  CHECK(cmp_gamma(g, h) == Verdict::Less);
  CHECK(cmp_gamma(a * h, a * g) == Verdict::Less);
  CHECK(cmp_gamma(a * g, a * h) == Verdict::Greater);
  CHECK((a * g).omega() == delta(1, Radical(Dyadic(7, 1))));
  CHECK((a * h).omega() == delta(0, Radical(2)));
}

TEST_CASE("explained comparison reports the deciding stage") {
  using Stage = GammaCmpExplained::Stage;
  CHECK(cmp_gamma_explained(t, a).stage == Stage::AExp);
  CHECK(cmp_gamma_explained(one, t).stage == Stage::TExp);
  CHECK(cmp_gamma_explained(a, b).stage == Stage::OmegaSum);
  CHECK(cmp_gamma_explained(b, b).stage == Stage::Equal);
  const GammaElement x(BSElement::identity(),
                       delta(0, Radical(1)) + delta(1, Radical(-1)));
  CHECK(cmp_gamma_explained(x, one).stage == Stage::OmegaTie);
  CHECK(cmp_gamma_explained(x, one).verdict == Verdict::Greater);
}
