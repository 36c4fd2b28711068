#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "pareto_smooth/core/fixed_point.hpp"

namespace pareto_smooth {

template <typename Profit, typename Weight>
struct KnapsackPoint {
  Profit profit{};
  Weight weight{};

  friend bool operator==(const KnapsackPoint&, const KnapsackPoint&) = default;
};

/// Nemhauser-Ullmann: the Pareto list of (profit, weight) pairs, maximizing
/// profit and minimizing weight, over all subsets of the first i items, for
/// i = 0..n. Each list is sorted by strictly increasing weight and strictly
/// increasing profit. A step costs O(size of the previous list).
template <typename Profit, typename Weight>
std::vector<std::vector<KnapsackPoint<Profit, Weight>>> nemhauser_ullmann(std::span<const Profit> profits,
                                                                          std::span<const Weight> weights) {
  using Point = KnapsackPoint<Profit, Weight>;
  if (profits.size() != weights.size())
    throw std::invalid_argument("nemhauser_ullmann: profits and weights differ in length");
  for (std::size_t i = 0; i < profits.size(); ++i)
    if (profits[i] < Profit{} || weights[i] < Weight{})
      throw std::invalid_argument("nemhauser_ullmann: profits and weights must be nonnegative");

  std::vector<std::vector<Point>> prefixes;
  prefixes.reserve(profits.size() + 1);
  prefixes.push_back({Point{}});
  std::vector<Point> merged;
  for (std::size_t i = 0; i < profits.size(); ++i) {
    const auto& prev = prefixes.back();
    merged.clear();
    merged.reserve(2 * prev.size());
    // Merge prev and prev + item by weight; equal weights keep the larger profit first.
    std::size_t a = 0;
    std::size_t b = 0;
    while (a < prev.size() || b < prev.size()) {
      Point take;
      if (b == prev.size()) {
        take = prev[a++];
      } else {
        const Point shifted{prev[b].profit + profits[i], prev[b].weight + weights[i]};
        if (a == prev.size() || shifted.weight < prev[a].weight ||
            (shifted.weight == prev[a].weight && prev[a].profit < shifted.profit)) {
          take = shifted;
          ++b;
        } else {
          take = prev[a++];
        }
      }
      merged.push_back(take);
    }
    std::vector<Point> next;
    next.reserve(merged.size());
    for (const auto& p : merged)
      if (next.empty() || next.back().profit < p.profit) next.push_back(p);
    prefixes.push_back(std::move(next));
  }
  return prefixes;
}

template <typename Profit, typename Weight>
std::vector<std::vector<KnapsackPoint<Profit, Weight>>> nemhauser_ullmann(const std::vector<Profit>& profits,
                                                                          const std::vector<Weight>& weights) {
  return nemhauser_ullmann(std::span<const Profit>(profits), std::span<const Weight>(weights));
}

}  // namespace pareto_smooth
