#include "pareto_smooth/sampling/rng.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace pareto_smooth {

namespace {

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 33)) * 0xff51afd7ed558ccdULL;
  z = (z ^ (z >> 33)) * 0xc4ceb9fe1a85ec53ULL;
  return z ^ (z >> 33);
}

}  // namespace

SplitMix64 SeededRng::stream(std::uint64_t trial, std::uint64_t entry) const {
  const std::uint64_t a = mix(master_ ^ 0x243f6a8885a308d3ULL);
  const std::uint64_t b = mix(a ^ mix(trial + 0x13198a2e03707344ULL));
  return SplitMix64(mix(b ^ mix(entry + 0xa4093822299f31d0ULL)));
}

std::uint64_t uniform_below(SplitMix64& gen, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound - 1);
  for (;;) {
    const std::uint64_t v = gen() & mask;
    if (v < bound) return v;
  }
}

double uniform01(SplitMix64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

double standard_normal(SplitMix64& gen) {
  double u1 = uniform01(gen);
  while (u1 <= 0.0) u1 = uniform01(gen);
  const double u2 = uniform01(gen);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace pareto_smooth
