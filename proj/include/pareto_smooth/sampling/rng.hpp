#pragma once

#include <cstdint>
#include <limits>

namespace pareto_smooth {

/// SplitMix64; satisfies UniformRandomBitGenerator. Cheap to seed, so one
/// generator per (trial, entry) substream costs nothing.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Master seed plus substream derivation: the stream for (trial, entry)
/// depends only on those two indices, never on how trials are scheduled.
class SeededRng {
 public:
  /// Trial index reserved for per-experiment data fixed before any trial
  /// (solution sets, tail objectives, adversarial centers).
  static constexpr std::uint64_t kStructureTrial = std::numeric_limits<std::uint64_t>::max();

  explicit SeededRng(std::uint64_t master_seed) : master_(master_seed) {}

  std::uint64_t master_seed() const { return master_; }
  SplitMix64 stream(std::uint64_t trial, std::uint64_t entry) const;

 private:
  std::uint64_t master_;
};

/// Uniform integer in [0, bound); bound > 0. Bitmask rejection, so the result
/// does not depend on the standard library's distribution implementations.
std::uint64_t uniform_below(SplitMix64& gen, std::uint64_t bound);
/// Uniform double in [0, 1) with 53 random bits.
double uniform01(SplitMix64& gen);
/// Standard normal via Box-Muller.
double standard_normal(SplitMix64& gen);

}  // namespace pareto_smooth
