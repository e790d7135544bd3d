#pragma once

#include <cstdint>

#include "gcryst/rational.hpp"

namespace gcryst {

// Deterministic splitmix64 stream.  Per-trial generators are derived as
// mix(master seed, trial index), so sharding trials across workers can
// never change results.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  static Rng for_trial(std::uint64_t master_seed, std::uint64_t trial) {
    return Rng(mix(master_seed ^ 0x9e3779b97f4a7c15ULL, trial));
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi], inclusive.
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // Numerator and denominator independent uniform integers in [1, 20]:
  // small enough for speed, large enough that a false identity fails with
  // overwhelming probability under exact arithmetic.
  Rat positive_rational() { return Rat(uniform(1, 20), uniform(1, 20)); }

 private:
  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace gcryst
