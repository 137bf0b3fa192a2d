#pragma once

#include <gmpxx.h>

#include <string>

#include "bsomega/bs_element.hpp"
#include "bsomega/omega_element.hpp"

namespace bsomega {

// Element of Gamma = BS(1,2) |x Omega in normal form (w, x) with
// w = t^k a^u and x in Omega.  Semidirect product law
//   (w1, x1) (w2, x2) = (w1 w2, x1 + rho(w1) x2),
// identity ((0,0), 0), inverse (w^-1, -rho(w^-1) x).
class GammaElement {
 public:
  GammaElement() = default;
  GammaElement(BSElement w, OmegaElement x)
      : w_(std::move(w)), x_(std::move(x)) {}

  static GammaElement identity() { return {}; }
  static GammaElement gen_t() { return {BSElement::t_power(1), {}}; }
  static GammaElement gen_a() { return {BSElement::a_power(Dyadic(1)), {}}; }
  static GammaElement gen_b() {
    return {BSElement::identity(), OmegaElement::delta(0, Radical(1))};
  }

  const BSElement& bs() const { return w_; }
  const OmegaElement& omega() const { return x_; }
  bool is_identity() const { return w_.is_identity() && x_.is_zero(); }

  GammaElement operator*(const GammaElement& o) const {
    return {w_ * o.w_, x_ + action_apply(w_, o.x_)};
  }
  GammaElement inverse() const {
    BSElement wi = w_.inverse();
    return {wi, -action_apply(wi, x_)};
  }
  GammaElement pow(const mpz_class& n) const;

  bool operator==(const GammaElement& o) const {
    return w_ == o.w_ && x_ == o.x_;
  }
  bool operator!=(const GammaElement& o) const { return !(*this == o); }

  // Word over t a b T A B (with ^powers) that parses back to this element.
  std::string to_word() const;

  std::string to_string() const {
    return "(k=" + w_.k.get_str() + ", u=" + w_.u.to_string() +
           ", omega=" + x_.to_string() + ")";
  }

 private:
  BSElement w_;
  OmegaElement x_;
};

// g h g^-1
GammaElement gamma_conj(const GammaElement& g, const GammaElement& h);
// [g, h] = g h g^-1 h^-1
GammaElement gamma_comm(const GammaElement& g, const GammaElement& h);

// Sign convention for conjugate families: which of t^n b t^-n and
// t^-n b t^n (resp. a^-i b a^i and a^i b a^-i) the index n refers to.
enum class ConjugationSign { PositiveLeft, NegativeLeft };

// The conjugates t^n b t^-n and a^-i b a^i (and their sign-flipped
// variants).  base is 't' or 'a'.
GammaElement conjugate_family(char base, const mpz_class& n,
                              ConjugationSign sign);

// Structural (representation-level) strict order, used for deduplication
// and lookup tables; unrelated to the group order.
struct GammaStructLess {
  bool operator()(const GammaElement& a, const GammaElement& b) const;
};

}  // namespace bsomega
