#include "bsomega/omega_element.hpp"

namespace bsomega {

void OmegaElement::insert(const mpz_class& index, const Radical& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = support_.emplace(index, value);
  if (!inserted) {
    Radical s = it->second + value;
    if (s.is_zero())
      support_.erase(it);
    else
      it->second = std::move(s);
  }
}

OmegaElement OmegaElement::delta(const mpz_class& index,
                                 const Radical& value) {
  OmegaElement x;
  x.insert(index, value);
  return x;
}

Radical OmegaElement::coord(const mpz_class& index) const {
  auto it = support_.find(index);
  return it == support_.end() ? Radical() : it->second;
}

OmegaElement OmegaElement::operator-() const {
  OmegaElement r;
  for (const auto& [n, v] : support_) r.support_.emplace(n, -v);
  return r;
}

OmegaElement OmegaElement::operator+(const OmegaElement& o) const {
  OmegaElement r = *this;
  for (const auto& [n, v] : o.support_) r.insert(n, v);
  return r;
}

OmegaElement OmegaElement::operator-(const OmegaElement& o) const {
  return *this + (-o);
}

Radical OmegaElement::sum() const {
  Radical s;
  for (const auto& [n, v] : support_) s = s + v;
  return s;
}

std::string OmegaElement::to_string() const {
  if (support_.empty()) return "0";
  std::string out = "{";
  bool first = true;
  for (const auto& [n, v] : support_) {
    if (!first) out += ", ";
    first = false;
    out += n.get_str() + ": " + v.to_string();
  }
  return out + "}";
}

OmegaElement apply_a_power(const OmegaElement& x, const Dyadic& u) {
  if (u.is_zero()) return x;
  OmegaElement r;
  for (const auto& [m, v] : x.support()) {
    r = r + OmegaElement::delta(m, v.scale_pow2(u.mul_pow2(m)));
  }
  return r;
}

OmegaElement apply_t_shift(const OmegaElement& x, const mpz_class& k,
                           ShiftConvention conv) {
  if (k == 0) return x;
  OmegaElement r;
  for (const auto& [m, v] : x.support()) {
    const mpz_class target =
        conv == ShiftConvention::RelationFixed ? mpz_class(m - k)
                                               : mpz_class(m + k);
    r = r + OmegaElement::delta(target, v);
  }
  return r;
}

OmegaElement action_apply(const BSElement& w, const OmegaElement& x) {
  return apply_t_shift(apply_a_power(x, w.u), w.k,
                       ShiftConvention::RelationFixed);
}

}  // namespace bsomega
