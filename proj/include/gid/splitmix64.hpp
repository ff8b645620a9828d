#pragma once

#include <cstdint>

namespace gid {

// splitmix64 (Vigna's fixed-increment variant). Chosen as the project-wide
// seeded generator because the constants below fully pin the stream, so any
// reimplementation in another language reproduces plans and synthetic data
// bit for bit.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits; exact dyadic values, so
  /// downstream arithmetic is reproducible across platforms.
  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Uniform index in [0, bound). Plain modulo: the bias is below 2^-53 for
  /// every bound this project uses and the draw count stays fixed.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

}  // namespace gid
