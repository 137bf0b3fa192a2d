#pragma once

#include <json.hpp>

#include "bsomega/gamma_element.hpp"

namespace bsomega {

// Insertion-ordered JSON throughout so that identical inputs produce
// byte-identical reports.
using Json = nlohmann::ordered_json;

// {"k": "<int>", "u": "<dyadic>", "omega": [{"index": "<int>",
//  "terms": [{"exp": "<dyadic>", "coeff": "<dyadic>"}, ...]}, ...]}
// Integers are rendered as strings: exponents are arbitrary precision.
// Index and term order ascending, matching the canonical maps.
Json to_json(const Dyadic& d);
Json to_json(const Radical& r);
Json to_json(const OmegaElement& x);
Json to_json(const GammaElement& g);

Dyadic dyadic_from_json(const Json& j);
Radical radical_from_json(const Json& j);
OmegaElement omega_from_json(const Json& j);
GammaElement gamma_from_json(const Json& j);

}  // namespace bsomega
