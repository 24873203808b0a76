#pragma once

#include <cstdint>
#include <random>

namespace quasicut {

// Deterministic seeded source. All randomness in the library flows
// through this wrapper so results reproduce bit-for-bit for a fixed
// seed on any platform (mt19937_64 output is pinned by the standard;
// std::uniform_real_distribution is not, so we avoid it).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1) with 53 random mantissa bits.
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // Uniform in [0, hi).
  double uniform(double hi) { return unit() * hi; }

  // Uniform integer in [0, n). Modulo bias is irrelevant at our scales.
  int below(int n) { return static_cast<int>(eng_() % static_cast<std::uint64_t>(n)); }

  // Uniform integer in [lo, hi] inclusive.
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace quasicut
