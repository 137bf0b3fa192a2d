#pragma once

#include <gmpxx.h>

#include <string>

#include "bsomega/dyadic.hpp"

namespace bsomega {

// Normal form t^k a^u of an element of BS(1,2) = <t, a | t a t^-1 = a^2>,
// with k an integer and u a dyadic rational (the group is Z |x Z[1/2]).
//
// The product law follows from a^u t^m = t^m a^(u / 2^m):
//   (k1, u1) (k2, u2) = (k1 + k2, u1 * 2^-k2 + u2).
struct BSElement {
  mpz_class k;
  Dyadic u;

  BSElement() : k(0), u() {}
  BSElement(mpz_class k_, Dyadic u_) : k(std::move(k_)), u(std::move(u_)) {}

  static BSElement identity() { return {}; }
  static BSElement t_power(const mpz_class& n) { return {n, Dyadic()}; }
  static BSElement a_power(const Dyadic& p) { return {mpz_class(0), p}; }

  bool is_identity() const { return k == 0 && u.is_zero(); }

  BSElement operator*(const BSElement& o) const {
    return {k + o.k, u.mul_pow2(-o.k) + o.u};
  }
  BSElement inverse() const { return {-k, -u.mul_pow2(k)}; }

  bool operator==(const BSElement& o) const { return k == o.k && u == o.u; }
  bool operator!=(const BSElement& o) const { return !(*this == o); }

  std::string to_string() const {
    return "t^" + k.get_str() + " a^(" + u.to_string() + ")";
  }
};

}  // namespace bsomega
