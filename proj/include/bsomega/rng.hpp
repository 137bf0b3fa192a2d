#pragma once

#include <cstdint>

namespace bsomega {

// SplitMix64 (Steele, Lea, Flood 2014), the exact reference recurrence.
// Chosen so that seeded runs reproduce bit-identically on any platform;
// std::uniform_int_distribution is implementation-defined and would not.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, n) by 128-bit multiply-shift (Lemire reduction,
  // no rejection; bias is below 2^-64 and irrelevant for sampling).
  std::uint64_t bounded(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

 private:
  std::uint64_t state_;
};

}  // namespace bsomega
