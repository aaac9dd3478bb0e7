#pragma once

#include <cstdint>

namespace hypwalk {

// SplitMix64 (Vigna). One 64-bit state word, one mix per draw. Plenty for
// Monte Carlo at desk scale, and trivially splittable, which is what the
// reproducibility contract needs: every worker gets its own derived stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1), 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) {
    // Modulo bias is < n / 2^64, irrelevant for the n used here (< 2^32).
    return next_u64() % n;
  }

 private:
  std::uint64_t state_;
};

/// Derives a statistically independent child seed. Nested application gives
/// the (master, n, trial, walk) seed tree used throughout.
inline std::uint64_t child_seed(std::uint64_t parent, std::uint64_t index) {
  std::uint64_t z = parent + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace hypwalk
