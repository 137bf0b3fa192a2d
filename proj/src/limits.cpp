#include "bsomega/limits.hpp"

namespace bsomega {

namespace {
long g_max_pow2_bits = 1L << 22;
std::size_t g_ball_budget = 500000;
}  // namespace

long max_pow2_bits() { return g_max_pow2_bits; }
void set_max_pow2_bits(long bits) { g_max_pow2_bits = bits; }

std::size_t ball_element_budget() { return g_ball_budget; }
void set_ball_element_budget(std::size_t n) { g_ball_budget = n; }

namespace {
long g_sign_bits = 64;
}

long sign_initial_bits() { return g_sign_bits; }
void set_sign_initial_bits(long bits) { g_sign_bits = bits > 0 ? bits : 64; }

}  // namespace bsomega
