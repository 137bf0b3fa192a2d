#pragma once

#include <gmpxx.h>

#include <string>

#include "bsomega/gamma_element.hpp"

namespace bsomega {

enum class Verdict { Less, Equal, Greater };

inline Verdict reverse(Verdict v) {
  switch (v) {
    case Verdict::Less: return Verdict::Greater;
    case Verdict::Greater: return Verdict::Less;
    default: return Verdict::Equal;
  }
}
inline Verdict verdict_of_int(int c) {
  return c < 0 ? Verdict::Less : c > 0 ? Verdict::Greater : Verdict::Equal;
}
std::string to_string(Verdict v);

// Lexicographic extension with the *second* coordinate dominant:
// (g1, f1) < (g2, f2) iff f1 < f2, or f1 = f2 and g1 < g2.  Both cmp_bs
// and cmp_gamma are instances.
template <typename CmpFirst, typename CmpSecond>
auto extension_order(CmpFirst cmp_first, CmpSecond cmp_second) {
  return [cmp_first, cmp_second](const auto& lhs, const auto& rhs) -> Verdict {
    const Verdict second = cmp_second(lhs.second, rhs.second);
    if (second != Verdict::Equal) return second;
    return cmp_first(lhs.first, rhs.first);
  };
}

// <_1: the natural order of Z (the t-exponent lattice).
Verdict cmp_int(const mpz_class& a, const mpz_class& b);
// <_2: the natural order of Z[1/2] (the a-exponent lattice).
Verdict cmp_dyadic(const Dyadic& a, const Dyadic& b);

// <_3 on Omega: compare coordinate sums exactly; on equal sums the vector
// whose coordinate is smaller at the smallest differing index is smaller.
// (Equivalent to comparing min{k : x_k < y_k} against min{k : y_k < x_k}:
// on sum-equal distinct vectors both index sets are nonempty because the
// coordinate differences sum to zero.)
Verdict cmp_omega(const OmegaElement& x, const OmegaElement& y);

// <_4 on BS(1,2): extension of <_1 and <_2 (a-exponent dominant).
Verdict cmp_bs(const BSElement& g, const BSElement& h);

// < on Gamma: extension of <_4 and <_3 (Omega part dominant).
Verdict cmp_gamma(const GammaElement& g, const GammaElement& h);

// cmp_gamma plus which stage decided, for diagnostics.
struct GammaCmpExplained {
  Verdict verdict;
  enum class Stage { OmegaSum, OmegaTie, AExp, TExp, Equal } stage;
  std::string lhs, rhs;  // the values compared at the deciding stage
};
GammaCmpExplained cmp_gamma_explained(const GammaElement& g,
                                      const GammaElement& h);

}  // namespace bsomega
