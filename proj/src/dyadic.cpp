#include "bsomega/dyadic.hpp"

#include <algorithm>
#include <stdexcept>

#include "bsomega/limits.hpp"

namespace bsomega {

void Dyadic::normalize() {
  if (exp_ < 0) throw std::logic_error("Dyadic: negative exponent");
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  if (exp_ == 0) return;
  const auto tz = mpz_scan1(num_.get_mpz_t(), 0);
  const long shift = std::min<long>(static_cast<long>(tz), exp_);
  if (shift > 0) {
    mpz_fdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(), shift);
    exp_ -= shift;
  }
}

Dyadic Dyadic::operator-() const {
  Dyadic r;
  r.num_ = -num_;
  r.exp_ = exp_;
  return r;
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
  const long m = std::max(exp_, o.exp_);
  mpz_class a = num_;
  mpz_class b = o.num_;
  mpz_mul_2exp(a.get_mpz_t(), a.get_mpz_t(), m - exp_);
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), m - o.exp_);
  return Dyadic(a + b, m);
}

Dyadic Dyadic::operator-(const Dyadic& o) const { return *this + (-o); }

Dyadic Dyadic::operator*(const Dyadic& o) const {
  return Dyadic(num_ * o.num_, exp_ + o.exp_);
}

Dyadic Dyadic::mul_pow2(const mpz_class& amount) const {
  if (num_ == 0) return Dyadic();
  mpz_class mag = abs(amount);
  if (mag > max_pow2_bits()) {
    throw ResourceLimitError("mul_pow2: shift of " + amount.get_str() +
                             " bits exceeds the configured bound");
  }
  const long a = static_cast<long>(amount.get_si());
  if (a >= 0) {
    const long from_exp = std::min(exp_, a);
    mpz_class n = num_;
    mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), a - from_exp);
    Dyadic r;
    r.num_ = std::move(n);
    r.exp_ = exp_ - from_exp;
    return r;
  }
  return Dyadic(num_, exp_ - a);
}

int Dyadic::cmp(const Dyadic& a, const Dyadic& b) {
  const long m = std::max(a.exp_, b.exp_);
  mpz_class x = a.num_;
  mpz_class y = b.num_;
  mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), m - a.exp_);
  mpz_mul_2exp(y.get_mpz_t(), y.get_mpz_t(), m - b.exp_);
  return ::cmp(x, y);
}

mpz_class Dyadic::floor_val() const {
  mpz_class q;
  mpz_fdiv_q_2exp(q.get_mpz_t(), num_.get_mpz_t(), exp_);
  return q;
}

std::pair<mpz_class, Dyadic> Dyadic::split_int_frac() const {
  mpz_class ip = floor_val();
  mpz_class scaled = ip;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), exp_);
  return {ip, Dyadic(num_ - scaled, exp_)};
}

std::string Dyadic::to_string() const {
  if (exp_ == 0) return num_.get_str();
  if (exp_ == 1) return num_.get_str() + "/2";
  return num_.get_str() + "/2^" + std::to_string(exp_);
}

Dyadic Dyadic::from_string(std::string_view s) {
  const auto bad = [&] {
    return std::invalid_argument("Dyadic: cannot parse '" + std::string(s) +
                                 "'");
  };
  const auto slash = s.find('/');
  std::string_view num_part = s.substr(0, slash);
  if (num_part.empty()) throw bad();
  mpz_class num;
  if (mpz_set_str(num.get_mpz_t(), std::string(num_part).c_str(), 10) != 0)
    throw bad();
  long exp = 0;
  if (slash != std::string_view::npos) {
    std::string_view den = s.substr(slash + 1);
    if (den == "2") {
      exp = 1;
    } else if (den.rfind("2^", 0) == 0) {
      try {
        exp = std::stol(std::string(den.substr(2)));
      } catch (const std::exception&) {
        throw bad();
      }
      if (exp < 0) throw bad();
    } else {
      throw bad();
    }
  }
  return Dyadic(num, exp);
}

}  // namespace bsomega
