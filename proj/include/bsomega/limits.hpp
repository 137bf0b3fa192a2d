#pragma once

#include <cstddef>
#include <stdexcept>

namespace bsomega {

// Thrown when an operation would exceed a configured resource bound
// (power-of-two shift width, ball element budget).  Mapped to exit
// code 3 by the CLI.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Largest |e| accepted when forming num * 2^e.  Ball enumeration and word
// evaluation produce coefficients like 2^(u * 2^m); this bound keeps a
// pathological word from allocating unbounded bignums.
long max_pow2_bits();
void set_max_pow2_bits(long bits);

// Maximum number of distinct elements a ball enumeration may hold.
// The CLI seeds this from the BSOMEGA_BALL_BUDGET environment variable.
std::size_t ball_element_budget();
void set_ball_element_budget(std::size_t n);

// Fractional bits the first interval refinement of an exact sign
// determination uses; doubles per round.  64 unless reconfigured.
long sign_initial_bits();
void set_sign_initial_bits(long bits);

}  // namespace bsomega
