#include "bsomega/gamma_element.hpp"

#include <stdexcept>

namespace bsomega {

GammaElement GammaElement::pow(const mpz_class& n) const {
  if (n < 0) return inverse().pow(-n);
  GammaElement acc = identity();
  GammaElement base = *this;
  mpz_class e = n;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

namespace {

void append_power(std::string& out, char gen, const mpz_class& p) {
  if (p == 0) return;
  if (!out.empty()) out += ' ';
  out += gen;
  if (p != 1) out += "^" + p.get_str();
}

// delta_n * (p * 2^v) as a word: t^-n a^v b^p a^-v t^n, with the dyadic
// power a^v spelled t^-m a^pv t^m for v = pv / 2^m.
void append_omega_term(std::string& out, const mpz_class& n,
                       const mpz_class& p, const Dyadic& v) {
  const mpz_class pv = v.num();
  const mpz_class m(v.exp());
  append_power(out, 't', -n - m);
  append_power(out, 'a', pv);
  append_power(out, 't', m);
  append_power(out, 'b', p);
  append_power(out, 't', -m);
  append_power(out, 'a', -pv);
  append_power(out, 't', m + n);
}

}  // namespace

std::string GammaElement::to_word() const {
  std::string out;
  for (const auto& [n, value] : x_.support()) {
    for (const auto& [q, c] : value.terms()) {
      // c * 2^q = p * 2^(q - e) for c = p / 2^e.
      append_omega_term(out, n, c.num(), q - Dyadic(mpz_class(c.exp())));
    }
  }
  append_power(out, 't', w_.k);
  const Dyadic& u = w_.u;
  if (!u.is_zero()) {
    const mpz_class m(u.exp());
    append_power(out, 't', -m);
    append_power(out, 'a', u.num());
    append_power(out, 't', m);
  }
  return out;
}

GammaElement gamma_conj(const GammaElement& g, const GammaElement& h) {
  return g * h * g.inverse();
}

GammaElement gamma_comm(const GammaElement& g, const GammaElement& h) {
  return g * h * g.inverse() * h.inverse();
}

GammaElement conjugate_family(char base, const mpz_class& n,
                              ConjugationSign sign) {
  const mpz_class e = sign == ConjugationSign::PositiveLeft ? n : mpz_class(-n);
  GammaElement conjugator;
  switch (base) {
    case 't':
      conjugator = GammaElement(BSElement::t_power(e), {});
      break;
    case 'a':
      conjugator = GammaElement(BSElement::a_power(Dyadic(e)), {});
      break;
    default:
      throw std::invalid_argument("conjugate_family: base must be 't' or 'a'");
  }
  return gamma_conj(conjugator, GammaElement::gen_b());
}

namespace {

int dyadic_cmp3(const Dyadic& a, const Dyadic& b) { return Dyadic::cmp(a, b); }

int radical_struct_cmp(const Radical& a, const Radical& b) {
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (int c = dyadic_cmp3(ia->first, ib->first)) return c;
    if (int c = dyadic_cmp3(ia->second, ib->second)) return c;
  }
  if (ia != a.terms().end()) return 1;
  if (ib != b.terms().end()) return -1;
  return 0;
}

int omega_struct_cmp(const OmegaElement& a, const OmegaElement& b) {
  auto ia = a.support().begin();
  auto ib = b.support().begin();
  for (; ia != a.support().end() && ib != b.support().end(); ++ia, ++ib) {
    if (int c = cmp(ia->first, ib->first)) return c;
    if (int c = radical_struct_cmp(ia->second, ib->second)) return c;
  }
  if (ia != a.support().end()) return 1;
  if (ib != b.support().end()) return -1;
  return 0;
}

}  // namespace

bool GammaStructLess::operator()(const GammaElement& a,
                                 const GammaElement& b) const {
  if (int c = cmp(a.bs().k, b.bs().k)) return c < 0;
  if (int c = dyadic_cmp3(a.bs().u, b.bs().u)) return c < 0;
  return omega_struct_cmp(a.omega(), b.omega()) < 0;
}

}  // namespace bsomega
