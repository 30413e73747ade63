#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace qgaforge {

/// Seeded random source. Every stochastic operation in the library takes one
/// of these explicitly, so a (config, seed) pair replays bit-identically.
///
/// Draws are decoded from the raw mt19937_64 output instead of the standard
/// <random> distributions, whose streams differ between standard library
/// implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double next_double(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  /// Uniform integer in [0, n), unbiased. n must be >= 1.
  std::uint64_t next_index(std::uint64_t n) {
    if (n == 0) {
      throw std::invalid_argument("next_index needs a non-empty range");
    }
    // Reject the tail of the 64-bit range that does not divide evenly by n.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = engine_();
    while (v >= limit) {
      v = engine_();
    }
    return v % n;
  }

  bool next_bernoulli(double p) { return next_double() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qgaforge
