#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "bsomega/dyadic.hpp"

namespace bsomega {

// Exact dyadic interval [lo, hi] enclosing a real value.
struct DyadicInterval {
  Dyadic lo;
  Dyadic hi;

  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  Dyadic width() const { return hi - lo; }
};

// Exact element of the radical tower Z[1/2, 2^(1/2), 2^(1/4), ...] and
// their inverses: a finite sum  sum_q coeff(q) * 2^q  with dyadic
// exponents q normalized into [0, 1) and nonzero dyadic coefficients.
//
// The powers 2^q for distinct dyadic q in [0,1) are linearly independent
// over Q (x^(2^k) - 2 is irreducible), so the value is zero iff the term
// map is empty; equality of canonical forms is syntactic.
class Radical {
 public:
  using TermMap = std::map<Dyadic, Dyadic, DyadicLess>;

  Radical() = default;
  Radical(long v) { insert_term(Dyadic(), Dyadic(v)); }  // NOLINT
  explicit Radical(const Dyadic& constant) { insert_term(Dyadic(), constant); }

  // 2^q for an arbitrary dyadic q.
  static Radical pow2(const Dyadic& q);
  // The scaling constant 2^(2^n), defined for every integer n; negative n
  // give the fractional exponents 2^(1/2^|n|).
  static Radical c_constant(const mpz_class& n);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Radical operator-() const;
  Radical operator+(const Radical& o) const;
  Radical operator-(const Radical& o) const;
  Radical operator*(const Radical& o) const;

  // Exact product with 2^q; the integer part of a shifted exponent folds
  // into the coefficient (2^(q+1) = 2 * 2^q).
  Radical scale_pow2(const Dyadic& q) const;

  bool operator==(const Radical& o) const { return terms_ == o.terms_; }
  bool operator!=(const Radical& o) const { return !(*this == o); }

  // Exact sign: 0 iff the term map is empty, otherwise decided by interval
  // refinement starting at `initial_bits` fractional bits (0 = the
  // configured sign_initial_bits()) and doubling until zero is excluded.
  // Terminates because nonzero canonical forms have nonzero value.
  int sign(long initial_bits = 0) const;
  static int cmp(const Radical& a, const Radical& b, long initial_bits = 0);

  // Enclosure of the value at the given fixed-point precision.
  DyadicInterval enclosure(long frac_bits) const;

  // Deterministic exponent-ascending rendering, e.g. "3 + 7/2^3*2^(1/2)".
  std::string to_string() const;

 private:
  void insert_term(const Dyadic& q, const Dyadic& coeff);

  TermMap terms_;
};

}  // namespace bsomega
