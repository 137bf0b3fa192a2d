#include "bsomega/word_parser.hpp"

#include <cctype>

namespace bsomega {

namespace {

GammaElement generator_power(char gen, const mpz_class& p) {
  switch (gen) {
    case 't':
      return GammaElement(BSElement::t_power(p), {});
    case 'a':
      return GammaElement(BSElement::a_power(Dyadic(p)), {});
    case 'b':
      return GammaElement(BSElement::identity(),
                          OmegaElement::delta(0, Radical(Dyadic(p))));
    default:
      throw std::logic_error("unreachable");
  }
}

}  // namespace

GammaElement parse_word(std::string_view text) {
  GammaElement result = GammaElement::identity();
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    char gen;
    mpz_class power;
    switch (c) {
      case 't': case 'a': case 'b':
        gen = c;
        power = 1;
        break;
      case 'T': case 'A': case 'B':
        gen = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        power = -1;
        break;
      default:
        throw ParseError("unexpected character '" + std::string(1, c) +
                             "' at offset " + std::to_string(i),
                         i);
    }
    ++i;
    if (i < n && text[i] == '^') {
      const std::size_t caret = i;
      ++i;
      bool negative = false;
      if (i < n && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
      }
      const std::size_t digits = i;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == digits)
        throw ParseError("expected integer exponent after '^' at offset " +
                             std::to_string(caret),
                         caret);
      mpz_class e(std::string(text.substr(digits, i - digits)), 10);
      if (negative) e = -e;
      power = power * e;
    }
    result = result * generator_power(gen, power);
  }
  return result;
}

}  // namespace bsomega
