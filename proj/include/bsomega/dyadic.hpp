#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>

namespace bsomega {

// Exact dyadic rational num / 2^exp, the elements of Z[1/2].
//
// Canonical form: exp >= 0, and exp > 0 implies num is odd; zero is
// stored as (0, 0).  Equality of canonical forms is therefore syntactic.
class Dyadic {
 public:
  Dyadic() : num_(0), exp_(0) {}
  Dyadic(long v) : num_(v), exp_(0) {}  // NOLINT: implicit on purpose
  Dyadic(mpz_class num, long exp = 0) : num_(std::move(num)), exp_(exp) {
    normalize();
  }

  const mpz_class& num() const { return num_; }
  long exp() const { return exp_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return exp_ == 0; }
  int sign() const { return sgn(num_); }

  Dyadic operator-() const;
  Dyadic operator+(const Dyadic& o) const;
  Dyadic operator-(const Dyadic& o) const;
  Dyadic operator*(const Dyadic& o) const;

  // Exact multiplication by 2^amount (amount of either sign).  Throws
  // ResourceLimitError when |amount| exceeds max_pow2_bits().
  Dyadic mul_pow2(const mpz_class& amount) const;

  // Total-order comparison consistent with the real values: -1, 0, +1.
  static int cmp(const Dyadic& a, const Dyadic& b);

  bool operator==(const Dyadic& o) const {
    return exp_ == o.exp_ && num_ == o.num_;
  }
  bool operator!=(const Dyadic& o) const { return !(*this == o); }

  // floor of the real value, and the split value = floor + frac with
  // frac in [0, 1).
  mpz_class floor_val() const;
  std::pair<mpz_class, Dyadic> split_int_frac() const;

  // "0", "5", "-3", "7/2", "-7/2^3".  Parse accepts exactly these shapes.
  std::string to_string() const;
  static Dyadic from_string(std::string_view s);

 private:
  void normalize();

  mpz_class num_;
  long exp_;
};

struct DyadicLess {
  bool operator()(const Dyadic& a, const Dyadic& b) const {
    return Dyadic::cmp(a, b) < 0;
  }
};

}  // namespace bsomega
