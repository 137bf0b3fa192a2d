#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bsomega/gamma_element.hpp"

namespace bsomega {

// Word syntax error; offset is the byte position in the input.
struct ParseError : std::runtime_error {
  ParseError(std::string msg, std::size_t offset_)
      : std::runtime_error(std::move(msg)), offset(offset_) {}
  std::size_t offset;
};

// Parses a word over the generators and returns its exact normal form.
//
// Grammar: tokens t, a, b with inverses T, A, B or an explicit power
// suffix (t^-1, a^12, B^3); powers are arbitrary-precision integers;
// whitespace between tokens is optional.  The empty word is the identity.
// The product is taken left to right.
GammaElement parse_word(std::string_view text);

}  // namespace bsomega
