#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pareto_smooth/core/instance.hpp"
#include "pareto_smooth/sampling/rng.hpp"

namespace test_support {

using namespace pareto_smooth;

// Weights uniform on a coarse grid so that ties and near-ties actually occur.
inline Instance random_instance(std::uint64_t seed, std::size_t n, std::size_t d, std::size_t m, int frac_bits = 8,
                                int eps_exp = 4) {
  SplitMix64 gen(seed);
  const FixedFormat fmt{frac_bits};
  const std::int64_t one = fmt.one().raw;
  FixedMatrix w(d, n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < n; ++j)
      w(i, j) = {static_cast<std::int64_t>(uniform_below(gen, static_cast<std::uint64_t>(2 * one + 1))) - one};
  std::vector<std::uint64_t> ranks;
  const std::uint64_t cube = std::uint64_t{1} << n;
  if (m > cube) throw std::invalid_argument("random_instance: m exceeds 2^n");
  std::vector<bool> used(cube, false);
  while (ranks.size() < m) {
    const std::uint64_t r = uniform_below(gen, cube);
    if (used[r]) continue;
    used[r] = true;
    ranks.push_back(r);
  }
  std::vector<Solution> sols;
  for (auto r : ranks) sols.push_back(Solution::from_rank(n, r));
  std::vector<Fixed> tails;
  std::vector<bool> tail_used(4 * m + 1, false);
  while (tails.size() < m) {
    const std::uint64_t t = uniform_below(gen, 4 * m + 1);
    if (tail_used[t]) continue;
    tail_used[t] = true;
    tails.push_back({static_cast<std::int64_t>(t) - static_cast<std::int64_t>(2 * m)});
  }
  return Instance(n, d, fmt, Epsilon{eps_exp}, 1.0, std::move(sols), std::move(w), std::move(tails));
}

}  // namespace test_support
