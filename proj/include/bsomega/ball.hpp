#pragma once

#include <vector>

#include "bsomega/gamma_element.hpp"
#include "bsomega/orders.hpp"

namespace bsomega {

// All distinct normal forms of words of length <= radius over
// {t, a, b}^{+-1}, deduplicated by exact equality and sorted ascending by
// the left order < on Gamma.  Deterministic for a given radius.
// Throws ResourceLimitError if the element count exceeds `budget`
// (0 means the global ball_element_budget()).
std::vector<GammaElement> ball(int radius, std::size_t budget = 0);

// The subgroup ball: distinct normal forms of words over {t, a}^{+-1} of
// length <= radius (elements of G = <t, a>), sorted by <.
std::vector<GammaElement> g_ball(int radius);

// t-powers t^-radius .. t^radius (elements of C = <t>), sorted by <.
std::vector<GammaElement> c_ball(int radius);

// Membership tests read the normal form directly.
inline bool in_c(const GammaElement& g) {
  return g.bs().u.is_zero() && g.omega().is_zero();
}
inline bool in_g(const GammaElement& g) { return g.omega().is_zero(); }

}  // namespace bsomega
