#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace choqpath {

/// SplitMix64, the portable 64-bit generator behind instance generation.
/// Fully specified so other implementations can reproduce instances byte for
/// byte: state advances by the 64-bit golden-ratio constant and the output is
/// the standard two-round xor-multiply mix of the advanced state.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1): the top 53 bits of next().
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in (0, 1]; used where strictly positive draws are needed.
  double next_unit_positive() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound]: next() modulo (bound + 1). The modulo
  /// bias is negligible for the small bounds used here and keeps the rule
  /// trivially portable.
  std::uint64_t next_upto(std::uint64_t bound) { return next() % (bound + 1); }

 private:
  std::uint64_t state_;
};

/// Independent per-concern streams derived from one seed. Stream k is a
/// SplitMix64 whose initial state is seed + (k+1) * 0x9E3779B97F4A7C15 mod 2^64.
/// Stream assignment: 0 = arc existence, 1 = arc costs, 2 = capacity
/// parameters, 3 = gamma draws.
inline SplitMix64 stream_for(std::uint64_t seed, int stream) {
  return SplitMix64(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(stream + 1));
}

inline constexpr int kStreamArcs = 0;
inline constexpr int kStreamCosts = 1;
inline constexpr int kStreamCapacity = 2;
inline constexpr int kStreamGamma = 3;

/// Uniform point on the simplex via sorted-uniform spacings: draw m-1 units,
/// sort them, and take consecutive differences against the [0,1] endpoints.
inline std::vector<double> sample_simplex(int m, SplitMix64& rng) {
  if (m == 1) return {1.0};
  std::vector<double> cuts(static_cast<std::size_t>(m) - 1);
  for (double& c : cuts) c = rng.next_unit();
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> p(static_cast<std::size_t>(m));
  double prev = 0.0;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    p[i] = cuts[i] - prev;
    prev = cuts[i];
  }
  p.back() = 1.0 - prev;
  return p;
}

}  // namespace choqpath
