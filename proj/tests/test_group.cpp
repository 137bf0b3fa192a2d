#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bsomega/ball.hpp"
#include "bsomega/json_io.hpp"
#include "bsomega/word_parser.hpp"
#include "test_support.hpp"

using namespace bsomega;

namespace {
const GammaElement t = GammaElement::gen_t();
const GammaElement a = GammaElement::gen_a();
const GammaElement b = GammaElement::gen_b();

OmegaElement delta(long n, const Radical& v) {
  return OmegaElement::delta(mpz_class(n), v);
}
}  // namespace

TEST_CASE("BS normal form product law") {
  const BSElement T = BSElement::t_power(1);
  const BSElement A = BSElement::a_power(Dyadic(1));
  CHECK(T * A * T.inverse() == BSElement::a_power(Dyadic(2)));
  // a t = t a^(1/2)
  CHECK(A * T == BSElement(mpz_class(1), Dyadic(1, 1)));
  CHECK((T * A).inverse() * (T * A) == BSElement::identity());
}

TEST_CASE("action on Omega") {
  const OmegaElement e0 = delta(0, Radical(1));
  // rho(a) doubles coordinate 0: a b a^-1 = b^2 additively.
  CHECK(apply_a_power(e0, Dyadic(1)) == delta(0, Radical(2)));
  CHECK(action_apply(BSElement::identity(), e0) == e0);
  // rho(t) rho(a) rho(t)^-1 = rho(a)^2 on delta_0.
  const OmegaElement lhs = action_apply(
      BSElement::t_power(1) * BSElement::a_power(Dyadic(1)) *
          BSElement::t_power(-1),
      e0);
  CHECK(lhs == apply_a_power(apply_a_power(e0, Dyadic(1)), Dyadic(1)));
  CHECK(lhs == delta(0, Radical(4)));
  // t shifts the support index down under the relation-fixed convention.
  CHECK(action_apply(BSElement::t_power(1), e0) == delta(-1, Radical(1)));
}

TEST_CASE("action is a homomorphism") {
  SplitMix64 rng(31);
  const std::vector<GammaElement> pool = ball(3);
  for (int i = 0; i < 300; ++i) {
    const BSElement w1 = pool[rng.bounded(pool.size())].bs();
    const BSElement w2 = pool[rng.bounded(pool.size())].bs();
    const OmegaElement x = pool[rng.bounded(pool.size())].omega();
    CHECK(action_apply(w1 * w2, x) == action_apply(w1, action_apply(w2, x)));
  }
}

TEST_CASE("commutators of the generators") {
  CHECK(gamma_comm(t, a) == a);
  CHECK(gamma_comm(a, b) == b);
  CHECK(gamma_conj(a, b) == b * b);
  for (int i = -2; i <= 2; ++i) {
    for (int j = -2; j <= 2; ++j) {
      const GammaElement ti =
          conjugate_family('t', i, ConjugationSign::PositiveLeft);
      const GammaElement aj =
          conjugate_family('a', j, ConjugationSign::PositiveLeft);
      CHECK(gamma_comm(ti, aj).is_identity());
    }
  }
}

TEST_CASE("conjugate families") {
  // a^-1 b a scales the coordinate by c_0^-1 = 1/2.
  CHECK(conjugate_family('a', 1, ConjugationSign::NegativeLeft) ==
        GammaElement(BSElement::identity(), delta(0, Radical(Dyadic(1, 1)))));
  CHECK(conjugate_family('t', 0, ConjugationSign::PositiveLeft) == b);
  // t b t^-1 sits at index -1 under the relation-fixed shift.
  CHECK(conjugate_family('t', 1, ConjugationSign::PositiveLeft) ==
        GammaElement(BSElement::identity(), delta(-1, Radical(1))));
  CHECK(conjugate_family('t', 1, ConjugationSign::NegativeLeft) ==
        GammaElement(BSElement::identity(), delta(1, Radical(1))));
  CHECK_THROWS_AS(conjugate_family('b', 1, ConjugationSign::PositiveLeft),
                  std::invalid_argument);
}

TEST_CASE("group axioms on sampled triples") {
  SplitMix64 rng(32);
  const std::vector<GammaElement> pool = ball(3);
  const GammaElement one = GammaElement::identity();
  for (int i = 0; i < 300; ++i) {
    const GammaElement& g = pool[rng.bounded(pool.size())];
    const GammaElement& h = pool[rng.bounded(pool.size())];
    const GammaElement& k = pool[rng.bounded(pool.size())];
    CHECK((g * h) * k == g * (h * k));
    CHECK(g * g.inverse() == one);
    CHECK(one * g == g);
    CHECK(g * one == g);
  }
}

TEST_CASE("powers") {
  CHECK(b.pow(3) == GammaElement(BSElement::identity(), delta(0, Radical(3))));
  CHECK(b.pow(-2) ==
        GammaElement(BSElement::identity(), delta(0, Radical(-2))));
  const GammaElement ta = t * a;
  CHECK(ta.pow(3) == ta * ta * ta);
  CHECK(ta.pow(-2) == (ta * ta).inverse());
  CHECK(ta.pow(0).is_identity());
}

TEST_CASE("word parsing") {
  CHECK(parse_word("t a T A") == gamma_comm(t, a));
  CHECK(parse_word("t a T A") == a);
  CHECK(parse_word("").is_identity());
  CHECK(parse_word("   ").is_identity());
  CHECK(parse_word("a b A") ==
        GammaElement(BSElement::identity(), delta(0, Radical(2))));
  CHECK(parse_word("a b A B B").is_identity());
  CHECK(parse_word("t^3") == t * t * t);
  CHECK(parse_word("T^2") == (t * t).inverse());
  CHECK(parse_word("b^-2") == b.pow(-2));
  CHECK(parse_word("taTA") == a);
  CHECK(parse_word("a^+2") == a * a);
  CHECK(parse_word("t^12345678901234567890").bs().k ==
        mpz_class("12345678901234567890"));
}

TEST_CASE("parse errors carry byte offsets") {
  try {
    parse_word("t a x");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset == 4);
  }
  try {
    parse_word("t^");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset == 1);
  }
  try {
    parse_word("a ^2");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset == 2);
  }
}

TEST_CASE("word rendering round trips") {
  for (const GammaElement& g : ball(3)) {
    CHECK(parse_word(g.to_word()) == g);
  }
  // elements with dyadic a-exponents and scaled coordinates
  const GammaElement g = parse_word("a T a T b t a^3 B");
  CHECK(parse_word(g.to_word()) == g);
  const GammaElement h = parse_word("A b a t^2 b T^2");
  CHECK(parse_word(h.to_word()) == h);
}

TEST_CASE("JSON round trips") {
  for (const GammaElement& g : ball(2)) {
    CHECK(gamma_from_json(to_json(g)) == g);
  }
  const GammaElement g = parse_word("a T a T b t a^3 B A b a");
  const Json j = to_json(g);
  CHECK(gamma_from_json(j) == g);
  CHECK(j.contains("k"));
  CHECK(j.contains("u"));
  CHECK(j.contains("omega"));
}
