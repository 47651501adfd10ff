#pragma once

#include <cstdint>

namespace spheremax {

/// Counter-based deterministic random stream.
///
/// Contract (fixed; solver reproducibility depends on it):
///   finalize(z) is the SplitMix64 finalizer,
///     z += 0x9E3779B97F4A7C15; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9;
///     z = (z ^ z>>27) * 0x94D049BB133111EB; return z ^ z>>31.
///   A stream keyed by (seed, s1, s2) has
///     key  = finalize(finalize(finalize(seed) ^ s1) ^ s2)
///     word(i) = finalize(key + i * 0x9E3779B97F4A7C15)
///   uniform(i)   = (word(i) >> 11) * 2^-53              in [0, 1)
///   symmetric(i) = 2 * uniform(i) - 1                   in [-1, 1)
///   Gaussians come in Box-Muller pairs from consecutive uniforms u0, u1:
///     r = sqrt(-2 ln(1 - u0)), z0 = r cos(2 pi u1), z1 = r sin(2 pi u1).
///
/// The integer stream is platform-independent; double outputs additionally
/// assume IEEE-754 arithmetic and the platform libm for log/cos/sin.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t s1, std::uint64_t s2)
      : key_(finalize(finalize(finalize(seed) ^ s1) ^ s2)) {}

  static std::uint64_t finalize(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next_word() { return finalize(key_ + (counter_++) * 0x9E3779B97F4A7C15ULL); }

  /// Uniform in [0, 1).
  double next_unit() { return static_cast<double>(next_word() >> 11) * 0x1.0p-53; }

  /// Uniform in [-1, 1).
  double next_symmetric() { return 2.0 * next_unit() - 1.0; }

  /// Standard Gaussian via Box-Muller; values are delivered pairwise.
  double next_gaussian();

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace spheremax
