#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pareto_smooth/core/instance.hpp"
#include "pareto_smooth/sampling/distribution.hpp"

namespace pareto_smooth {

enum class Family { all_vectors, random_subset, knapsack };

std::string_view to_string(Family family);
Family family_from_string(std::string_view name);

/// Generator configuration. Everything but the weights (solution set, tail
/// objectives, adversarial centers) is derived from `seed` alone and stays
/// fixed across trials; the weights of trial k come from trial k's substreams.
struct GeneratorSpec {
  Family family = Family::all_vectors;
  std::size_t n = 4;
  std::size_t d = 1;
  std::size_t m = 0;  // random_subset size
  double phi = 1.0;
  DistributionKind distribution = DistributionKind::uniform_band;
  std::uint64_t seed = 1;
  int frac_bits = kDefaultFracBits;
  int epsilon_exponent = 10;
  double center = 0.0;
  bool random_centers = false;
};

/// Grid resolution F must exceed the epsilon exponent by this many bits.
inline constexpr int kMinGridMargin = 10;

/// Adversarial weights 2^j of the knapsack family (item j has weight 2^j).
std::vector<std::uint64_t> knapsack_item_weights(std::size_t n);

/// The weight distribution implied by a GeneratorSpec (centers included).
WeightDistribution weight_distribution(const GeneratorSpec& spec);

/// Throws std::invalid_argument for infeasible specs (m > 2^n, F < E + 10, ...).
void validate(const GeneratorSpec& spec);

/// Instance of trial `trial`.
///  - all_vectors: S = {0,1}^n in lexicographic order, distinct random tails.
///  - random_subset: m distinct random vectors, distinct random tails.
///  - knapsack (d = 1): S = {0,1}^n, tail(x) = -sum_j 2^j x^j (the negated
///    adversarial knapsack weight, scaled by 2^-F), row 1 of W = random profits.
Instance generate_instance(const GeneratorSpec& spec, std::uint64_t trial = 0);

}  // namespace pareto_smooth
