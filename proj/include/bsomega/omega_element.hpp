#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "bsomega/bs_element.hpp"
#include "bsomega/radical.hpp"

namespace bsomega {

// Which direction the generator t shifts coordinate indices.
//
// RelationFixed is the convention under which conjugation by t squares the
// a-scaling exactly (rho(t a t^-1) = rho(a)^2, using c_(n+1) = c_n^2);
// group arithmetic always runs on it.  PaperLiteral (y_n = x_(n-1)) is
// kept for the action-level audit, which shows that under it the
// composed generator actions satisfy t a t^-1 = a^(1/2) instead.
enum class ShiftConvention { RelationFixed, PaperLiteral };

// Element of Omega = (+)_{n in Z} H_n with H_n the additive group of the
// radical tower: a finitely supported map index -> nonzero value.
// The group law is coordinatewise addition.
class OmegaElement {
 public:
  using Support = std::map<mpz_class, Radical>;

  OmegaElement() = default;
  static OmegaElement delta(const mpz_class& index, const Radical& value);

  const Support& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }
  Radical coord(const mpz_class& index) const;

  OmegaElement operator-() const;
  OmegaElement operator+(const OmegaElement& o) const;
  OmegaElement operator-(const OmegaElement& o) const;

  bool operator==(const OmegaElement& o) const {
    return support_ == o.support_;
  }
  bool operator!=(const OmegaElement& o) const { return !(*this == o); }

  // Sum of all coordinates, exact in the radical tower.
  Radical sum() const;

  std::string to_string() const;

 private:
  void insert(const mpz_class& index, const Radical& value);

  Support support_;
};

// Coordinatewise scaling (a^u if u = 1): coordinate m is multiplied by
// 2^(u * 2^m), the exact power c_m^u of the tower constant c_m = 2^(2^m).
OmegaElement apply_a_power(const OmegaElement& x, const Dyadic& u);

// Shift by t^k.  Under RelationFixed a source coordinate at index m lands
// at m - k; under PaperLiteral at m + k.
OmegaElement apply_t_shift(const OmegaElement& x, const mpz_class& k,
                           ShiftConvention conv);

// The action rho(t^k a^u) of BS(1,2) on Omega:
//   rho(t^k a^u)(x)_n = 2^(u * 2^(n+k)) * x_(n+k),
// a homomorphism for the BSElement product law.
OmegaElement action_apply(const BSElement& w, const OmegaElement& x);

}  // namespace bsomega
