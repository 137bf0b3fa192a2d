#include "bsomega/ball.hpp"

#include <algorithm>
#include <set>

#include "bsomega/limits.hpp"

namespace bsomega {

namespace {

std::vector<GammaElement> enumerate(const std::vector<GammaElement>& gens,
                                    int radius, std::size_t budget) {
  std::set<GammaElement, GammaStructLess> seen;
  seen.insert(GammaElement::identity());
  std::vector<GammaElement> frontier{GammaElement::identity()};
  for (int level = 1; level <= radius; ++level) {
    std::vector<GammaElement> next;
    for (const GammaElement& g : frontier) {
      for (const GammaElement& s : gens) {
        GammaElement h = g * s;
        if (seen.insert(h).second) {
          if (seen.size() > budget)
            throw ResourceLimitError(
                "ball enumeration exceeded the element budget (" +
                std::to_string(budget) + ")");
          next.push_back(std::move(h));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<GammaElement> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(),
            [](const GammaElement& a, const GammaElement& b) {
              return cmp_gamma(a, b) == Verdict::Less;
            });
  return out;
}

}  // namespace

std::vector<GammaElement> ball(int radius, std::size_t budget) {
  if (budget == 0) budget = ball_element_budget();
  const GammaElement t = GammaElement::gen_t();
  const GammaElement a = GammaElement::gen_a();
  const GammaElement b = GammaElement::gen_b();
  return enumerate(
      {t, t.inverse(), a, a.inverse(), b, b.inverse()}, radius, budget);
}

std::vector<GammaElement> g_ball(int radius) {
  const GammaElement t = GammaElement::gen_t();
  const GammaElement a = GammaElement::gen_a();
  return enumerate({t, t.inverse(), a, a.inverse()}, radius,
                   ball_element_budget());
}

std::vector<GammaElement> c_ball(int radius) {
  std::vector<GammaElement> out;
  for (int n = -radius; n <= radius; ++n)
    out.push_back(GammaElement(BSElement::t_power(n), {}));
  return out;
}

}  // namespace bsomega
