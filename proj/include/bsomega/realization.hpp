#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bsomega/ball.hpp"
#include "bsomega/report.hpp"

namespace bsomega {

// Finite-scale order embedding of a ball into the line: elements sorted
// ascending by <, coordinates assigned by rank and translated so that
// phi(identity) = 0.  Exact integer coordinates; strictly order
// preserving by construction, which the audit re-verifies.
class RealizedBall {
 public:
  RealizedBall(int radius, std::vector<GammaElement> sorted_elements);

  int radius() const { return radius_; }
  const std::vector<GammaElement>& elements() const { return elements_; }
  long coord(std::size_t rank) const { return coords_[rank]; }
  bool contains(const GammaElement& g) const;
  long phi(const GammaElement& g) const;  // throws if g is not realized

  Json to_json() const;  // {element, coord} list
  // Plain-text number line, one "coord | word" row per element.
  std::string render_number_line() const;

 private:
  int radius_;
  std::vector<GammaElement> elements_;
  std::vector<long> coords_;
  std::map<GammaElement, std::size_t, GammaStructLess> rank_;
};

RealizedBall build_embedding(int radius, std::size_t budget = 0);

// Piecewise-linear partial realization of left translation g -> sg:
// breakpoints (phi(g), phi(sg)) for every g with g and sg both realized,
// affine interpolation between breakpoints, identity-plus-constant tails.
// A non-monotone map is kept and flagged; it is evidence about
// left-invariance of < at s, not an error.
struct PLMap {
  char generator;
  std::vector<std::pair<long, long>> breakpoints;  // ascending inputs
  bool monotone = true;
  // ranks (into the realized ball) of the first output inversion
  std::optional<std::pair<std::size_t, std::size_t>> first_inversion;

  mpq_class eval(const mpq_class& x) const;
  Json to_json() const;  // {breakpoints, monotone}
};

PLMap realize_generator(char s, const RealizedBall& ball);

// phi(g) < phi(h) < phi(t^n b t^-n) for h = a^-1 b a, every realized
// g in G and every n whose conjugate the ball realizes.
AuditReport check_c2(const RealizedBall& ball);

// No realized coordinate in the hull is fixed by the realized t, a and b
// maps simultaneously; reports the minimal joint displacement over the
// breakpoint-and-midpoint grid.
AuditReport check_c3(const RealizedBall& ball);

// Freeness proxy for b: (a) bg > g exactly on the ball, (b) cofinality
// bounds up to n_max, (c) the realized b map lies strictly above the
// diagonal at every breakpoint of a radius `realize_radius` embedding.
AuditReport freeness_report(const std::vector<GammaElement>& ball_elems,
                            int n_max, int realize_radius);

// Full realization artifact: embedding, generator maps, c2/c3/freeness.
Json realization_artifact(int radius, int n_max,
                          std::size_t budget = 0);

}  // namespace bsomega
