#include "bsomega/json_io.hpp"

namespace bsomega {

Json to_json(const Dyadic& d) { return d.to_string(); }

Json to_json(const Radical& r) {
  Json terms = Json::array();
  for (const auto& [q, c] : r.terms())
    terms.push_back({{"exp", q.to_string()}, {"coeff", c.to_string()}});
  return terms;
}

Json to_json(const OmegaElement& x) {
  Json coords = Json::array();
  for (const auto& [n, v] : x.support())
    coords.push_back({{"index", n.get_str()}, {"terms", to_json(v)}});
  return coords;
}

Json to_json(const GammaElement& g) {
  return {{"k", g.bs().k.get_str()},
          {"u", g.bs().u.to_string()},
          {"omega", to_json(g.omega())}};
}

Dyadic dyadic_from_json(const Json& j) {
  return Dyadic::from_string(j.get<std::string>());
}

Radical radical_from_json(const Json& j) {
  Radical r;
  for (const auto& term : j) {
    const Dyadic q = Dyadic::from_string(term.at("exp").get<std::string>());
    const Dyadic c = Dyadic::from_string(term.at("coeff").get<std::string>());
    r = r + Radical(c).scale_pow2(q);
  }
  return r;
}

OmegaElement omega_from_json(const Json& j) {
  OmegaElement x;
  for (const auto& coord : j) {
    const mpz_class n(coord.at("index").get<std::string>(), 10);
    x = x + OmegaElement::delta(n, radical_from_json(coord.at("terms")));
  }
  return x;
}

GammaElement gamma_from_json(const Json& j) {
  const mpz_class k(j.at("k").get<std::string>(), 10);
  const Dyadic u = Dyadic::from_string(j.at("u").get<std::string>());
  return GammaElement(BSElement(k, u), omega_from_json(j.at("omega")));
}

}  // namespace bsomega
