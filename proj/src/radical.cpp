#include "bsomega/radical.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "bsomega/limits.hpp"

namespace bsomega {

namespace {

// Fixed-point enclosure [lo, hi] / 2^p of 2^q for q in [0, 1).
// Chain of directed-rounding square roots of 2 followed by binary
// exponentiation, every step rounded outward.
struct FixedInterval {
  mpz_class lo, hi;
};

FixedInterval fixed_mul(const FixedInterval& a, const FixedInterval& b,
                        long p) {
  // All enclosed values here are positive.
  mpz_class lo = a.lo * b.lo;
  mpz_fdiv_q_2exp(lo.get_mpz_t(), lo.get_mpz_t(), p);
  mpz_class hi = a.hi * b.hi;
  mpz_cdiv_q_2exp(hi.get_mpz_t(), hi.get_mpz_t(), p);
  return {std::move(lo), std::move(hi)};
}

FixedInterval pow2_fixed(const Dyadic& q, long p) {
  mpz_class one_fp(1);
  mpz_mul_2exp(one_fp.get_mpz_t(), one_fp.get_mpz_t(), p);
  if (q.is_zero()) return {one_fp, one_fp};

  // q = P / 2^K in canonical form, K >= 1, P odd, 0 < P < 2^K.
  const long k = q.exp();
  const mpz_class& pw = q.num();

  // r = 2^(1/2^K) by K iterated square roots of 2.
  FixedInterval r{one_fp * 2, one_fp * 2};
  for (long i = 0; i < k; ++i) {
    mpz_class lo_sh = r.lo;
    mpz_mul_2exp(lo_sh.get_mpz_t(), lo_sh.get_mpz_t(), p);
    mpz_sqrt(r.lo.get_mpz_t(), lo_sh.get_mpz_t());
    mpz_class hi_sh = r.hi;
    mpz_mul_2exp(hi_sh.get_mpz_t(), hi_sh.get_mpz_t(), p);
    mpz_sqrt(r.hi.get_mpz_t(), hi_sh.get_mpz_t());
    r.hi += 1;
  }

  // r^P by binary exponentiation with outward rounding.
  FixedInterval acc{one_fp, one_fp};
  mpz_class e = pw;
  FixedInterval base = r;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = fixed_mul(acc, base, p);
    e >>= 1;
    if (e > 0) base = fixed_mul(base, base, p);
  }
  return acc;
}

}  // namespace

void Radical::insert_term(const Dyadic& q, const Dyadic& coeff) {
  if (q.sign() < 0 || Dyadic::cmp(q, Dyadic(1)) >= 0)
    throw std::logic_error("Radical: exponent outside [0, 1)");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(q, coeff);
  if (!inserted) {
    Dyadic s = it->second + coeff;
    if (s.is_zero())
      terms_.erase(it);
    else
      it->second = std::move(s);
  }
}

Radical Radical::pow2(const Dyadic& q) {
  auto [ip, frac] = q.split_int_frac();
  Radical r;
  r.insert_term(frac, Dyadic(1).mul_pow2(ip));
  return r;
}

Radical Radical::c_constant(const mpz_class& n) {
  if (n >= 0) {
    if (n > 62 || mpz_class(1) << n.get_ui() > max_pow2_bits())
      throw ResourceLimitError("c_constant: 2^(2^" + n.get_str() +
                               ") exceeds the configured bound");
    return Radical(Dyadic(1).mul_pow2(mpz_class(1) << n.get_ui()));
  }
  mpz_class mag = -n;
  if (mag > max_pow2_bits())
    throw ResourceLimitError("c_constant: exponent 2^(" + n.get_str() +
                             ") exceeds the configured bound");
  return pow2(Dyadic(1, static_cast<long>(mag.get_si())));
}

Radical Radical::operator-() const {
  Radical r;
  for (const auto& [q, c] : terms_) r.terms_.emplace(q, -c);
  return r;
}

Radical Radical::operator+(const Radical& o) const {
  Radical r = *this;
  for (const auto& [q, c] : o.terms_) r.insert_term(q, c);
  return r;
}

Radical Radical::operator-(const Radical& o) const { return *this + (-o); }

Radical Radical::operator*(const Radical& o) const {
  Radical r;
  for (const auto& [q1, c1] : terms_) {
    for (const auto& [q2, c2] : o.terms_) {
      Dyadic q = q1 + q2;
      Dyadic c = c1 * c2;
      if (Dyadic::cmp(q, Dyadic(1)) >= 0) {
        q = q - Dyadic(1);
        c = c.mul_pow2(1);
      }
      r.insert_term(q, c);
    }
  }
  return r;
}

Radical Radical::scale_pow2(const Dyadic& q) const {
  auto [ip, frac] = q.split_int_frac();
  Radical r;
  for (const auto& [e, c] : terms_) {
    Dyadic ne = e + frac;
    mpz_class shift = ip;
    if (Dyadic::cmp(ne, Dyadic(1)) >= 0) {
      ne = ne - Dyadic(1);
      shift += 1;
    }
    r.insert_term(ne, c.mul_pow2(shift));
  }
  return r;
}

DyadicInterval Radical::enclosure(long frac_bits) const {
  const long p = frac_bits;
  mpz_class lo(0), hi(0);
  for (const auto& [q, c] : terms_) {
    FixedInterval base = pow2_fixed(q, p);
    mpz_class tlo = base.lo * c.num();
    mpz_class thi = base.hi * c.num();
    if (c.sign() < 0) std::swap(tlo, thi);
    mpz_fdiv_q_2exp(tlo.get_mpz_t(), tlo.get_mpz_t(), c.exp());
    mpz_cdiv_q_2exp(thi.get_mpz_t(), thi.get_mpz_t(), c.exp());
    lo += tlo;
    hi += thi;
  }
  return {Dyadic(lo, p), Dyadic(hi, p)};
}

int Radical::sign(long initial_bits) const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) return terms_.begin()->second.sign();
  if (initial_bits <= 0) initial_bits = sign_initial_bits();
  for (long p = initial_bits; p <= (1L << 24); p *= 2) {
    DyadicInterval iv = enclosure(p);
    if (iv.lo.sign() > 0) return 1;
    if (iv.hi.sign() < 0) return -1;
  }
  throw std::logic_error("Radical::sign: refinement failed to separate zero");
}

int Radical::cmp(const Radical& a, const Radical& b, long initial_bits) {
  if (a == b) return 0;
  return (a - b).sign(initial_bits);
}

std::string Radical::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [q, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    if (q.is_zero()) {
      out += c.to_string();
      continue;
    }
    if (c == Dyadic(1)) {
      out += "2^(" + q.to_string() + ")";
    } else if (c == Dyadic(-1)) {
      out += "-2^(" + q.to_string() + ")";
    } else {
      out += c.to_string() + "*2^(" + q.to_string() + ")";
    }
  }
  return out;
}

}  // namespace bsomega
