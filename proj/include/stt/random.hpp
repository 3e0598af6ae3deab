#pragma once

// Seeded randomness for workload generation.
//
// The engine is std::mt19937_64, whose output sequence the C++ standard fixes
// for every seed. Everything derived from it (bounded integers, unit doubles,
// normal deviates) is computed here rather than through <random>
// distributions, whose algorithms are implementation-defined.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace stt {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform in [0, bound), bound > 0. Rejection sampling on the top of the
  /// 64-bit range, so the result is exactly uniform.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t x = eng_();
      if (x >= limit) return x % bound;
    }
  }

  /// Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

  /// Standard normal deviate by the Box-Muller transform. Uses two fresh
  /// uniforms per call; the second deviate is discarded.
  double normal() {
    const double u1 = 1.0 - unit();  // (0, 1]
    const double u2 = unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace stt
