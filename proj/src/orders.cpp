#include "bsomega/orders.hpp"

namespace bsomega {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Less: return "Less";
    case Verdict::Equal: return "Equal";
    default: return "Greater";
  }
}

Verdict cmp_int(const mpz_class& a, const mpz_class& b) {
  return verdict_of_int(cmp(a, b));
}

Verdict cmp_dyadic(const Dyadic& a, const Dyadic& b) {
  return verdict_of_int(Dyadic::cmp(a, b));
}

namespace {

// First support index at which x and y differ, compared coordinatewise;
// Equal means the supports agree everywhere.
Verdict first_difference(const OmegaElement& x, const OmegaElement& y) {
  auto ix = x.support().begin();
  auto iy = y.support().begin();
  while (ix != x.support().end() || iy != y.support().end()) {
    if (ix == x.support().end())
      return verdict_of_int(-iy->second.sign());  // x has 0 there
    if (iy == y.support().end())
      return verdict_of_int(ix->second.sign());
    const int ic = cmp(ix->first, iy->first);
    if (ic < 0) return verdict_of_int(ix->second.sign());
    if (ic > 0) return verdict_of_int(-iy->second.sign());
    if (ix->second != iy->second)
      return verdict_of_int(Radical::cmp(ix->second, iy->second));
    ++ix;
    ++iy;
  }
  return Verdict::Equal;
}

}  // namespace

Verdict cmp_omega(const OmegaElement& x, const OmegaElement& y) {
  const Verdict by_sum = verdict_of_int(Radical::cmp(x.sum(), y.sum()));
  if (by_sum != Verdict::Equal) return by_sum;
  return first_difference(x, y);
}

// The Lemma's pairing writes an element of A |x B with the normal part
// first, a^(u * 2^k) t^k; that coordinate is the one the extension order
// compares (left multiplication transforms it by an order-preserving
// map, which makes <_4 left-invariant).
static Dyadic left_a_exponent(const BSElement& g) {
  return g.u.mul_pow2(g.k);
}

Verdict cmp_bs(const BSElement& g, const BSElement& h) {
  static const auto ext = extension_order(cmp_int, cmp_dyadic);
  return ext(std::make_pair(g.k, left_a_exponent(g)),
             std::make_pair(h.k, left_a_exponent(h)));
}

Verdict cmp_gamma(const GammaElement& g, const GammaElement& h) {
  static const auto ext = extension_order(cmp_bs, cmp_omega);
  return ext(std::make_pair(g.bs(), g.omega()),
             std::make_pair(h.bs(), h.omega()));
}

GammaCmpExplained cmp_gamma_explained(const GammaElement& g,
                                      const GammaElement& h) {
  using Stage = GammaCmpExplained::Stage;
  const Radical sg = g.omega().sum();
  const Radical sh = h.omega().sum();
  const Verdict by_sum = verdict_of_int(Radical::cmp(sg, sh));
  if (by_sum != Verdict::Equal)
    return {by_sum, Stage::OmegaSum, sg.to_string(), sh.to_string()};
  const Verdict by_tie = first_difference(g.omega(), h.omega());
  if (by_tie != Verdict::Equal)
    return {by_tie, Stage::OmegaTie, g.omega().to_string(),
            h.omega().to_string()};
  const Dyadic gu = left_a_exponent(g.bs());
  const Dyadic hu = left_a_exponent(h.bs());
  const Verdict by_u = cmp_dyadic(gu, hu);
  if (by_u != Verdict::Equal)
    return {by_u, Stage::AExp, gu.to_string(), hu.to_string()};
  const Verdict by_k = cmp_int(g.bs().k, h.bs().k);
  if (by_k != Verdict::Equal)
    return {by_k, Stage::TExp, g.bs().k.get_str(), h.bs().k.get_str()};
  return {Verdict::Equal, Stage::Equal, "", ""};
}

}  // namespace bsomega
