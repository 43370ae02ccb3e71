#ifndef HYLAT_RNG_HPP
#define HYLAT_RNG_HPP

#include <cmath>
#include <cstdint>

namespace hylat {

// All randomness in the library flows through SplitMix64 so that runs are
// bit-identical across platforms and standard libraries. Independent streams
// are derived by hashing (seed, tag, index) keys; parallel workers therefore
// produce results that do not depend on scheduling.

/// SplitMix64 finalizer: a full-avalanche mix of a 64-bit word.
inline std::uint64_t splitmix64_mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Derives a stream key from a base seed and up to two indices.
inline std::uint64_t derive_key(std::uint64_t seed, std::uint64_t a,
                                std::uint64_t b = 0) {
  std::uint64_t h = splitmix64_mix(seed ^ 0x7fb5d329728ea185ULL);
  h = splitmix64_mix(h ^ a);
  h = splitmix64_mix(h ^ b);
  return h;
}

/// Counter-based 64-bit generator (SplitMix64).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller (discards the second variate).
  double next_normal() {
    double u1 = next_double();
    while (u1 == 0.0) u1 = next_double();
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

 private:
  std::uint64_t state_;
};

/// Deterministic per-pair uniform in [0, 1), independent of draw order.
inline double pair_uniform(std::uint64_t seed, std::uint64_t i,
                           std::uint64_t j) {
  return static_cast<double>(derive_key(seed, i, j) >> 11) * 0x1.0p-53;
}

}  // namespace hylat

#endif  // HYLAT_RNG_HPP
