#include "pareto_smooth/sampling/generator.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace pareto_smooth {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::all_vectors:
      return "all_vectors";
    case Family::random_subset:
      return "random_subset";
    case Family::knapsack:
      return "knapsack";
  }
  return "?";
}

Family family_from_string(std::string_view name) {
  if (name == "all_vectors") return Family::all_vectors;
  if (name == "random_subset") return Family::random_subset;
  if (name == "knapsack") return Family::knapsack;
  throw std::invalid_argument("unknown solution-set family \"" + std::string(name) + "\"");
}

std::vector<std::uint64_t> knapsack_item_weights(std::size_t n) {
  if (n > 64) throw std::invalid_argument("knapsack: at most 64 items fit the adversarial weights 2^j");
  std::vector<std::uint64_t> w(n);
  for (std::size_t j = 0; j < n; ++j) w[j] = std::uint64_t{1} << j;
  return w;
}

namespace {

// Substream entry offsets for structure data drawn from kStructureTrial.
constexpr std::uint64_t kSolutionStream = 1;
constexpr std::uint64_t kTailStream = 2;
constexpr std::uint64_t kCenterStream = 3;

constexpr std::size_t kMaxCubeDimension = 24;

}  // namespace

WeightDistribution weight_distribution(const GeneratorSpec& spec) {
  WeightDistribution dist;
  dist.kind = spec.distribution;
  dist.phi = spec.phi;
  dist.default_center = spec.center;
  if (spec.random_centers) {
    const SeededRng rng(spec.seed);
    auto gen = rng.stream(SeededRng::kStructureTrial, kCenterStream);
    dist.centers.resize(spec.d * spec.n);
    for (auto& c : dist.centers) c = 2.0 * uniform01(gen) - 1.0;
  }
  return dist;
}

void validate(const GeneratorSpec& spec) {
  if (spec.n == 0) throw std::invalid_argument("generator: n must be at least 1");
  if (spec.d == 0) throw std::invalid_argument("generator: d must be at least 1");
  if (spec.epsilon_exponent < 0) throw std::invalid_argument("generator: epsilon exponent must be nonnegative");
  if (spec.frac_bits < spec.epsilon_exponent + kMinGridMargin)
    throw std::invalid_argument("generator: F must be at least epsilon_exponent + " +
                                std::to_string(kMinGridMargin));
  if (spec.frac_bits > kMaxFracBits)
    throw std::invalid_argument("generator: F must be at most " + std::to_string(kMaxFracBits));
  switch (spec.family) {
    case Family::all_vectors:
      if (spec.n > kMaxCubeDimension)
        throw std::invalid_argument("generator: all_vectors supports n <= " + std::to_string(kMaxCubeDimension));
      break;
    case Family::random_subset:
      if (spec.m == 0) throw std::invalid_argument("generator: random_subset needs m >= 1");
      if (spec.n < 63 && spec.m > (std::uint64_t{1} << spec.n))
        throw std::invalid_argument("generator: random_subset m = " + std::to_string(spec.m) +
                                    " exceeds 2^n = " + std::to_string(std::uint64_t{1} << spec.n));
      break;
    case Family::knapsack:
      if (spec.d != 1) throw std::invalid_argument("generator: knapsack family requires d = 1");
      if (spec.n > kMaxCubeDimension)
        throw std::invalid_argument("generator: knapsack instances support n <= " +
                                    std::to_string(kMaxCubeDimension));
      break;
  }
}

Instance generate_instance(const GeneratorSpec& spec, std::uint64_t trial) {
  validate(spec);
  const SeededRng rng(spec.seed);
  const FixedFormat fmt{spec.frac_bits};

  std::vector<Solution> solutions;
  if (spec.family == Family::random_subset) {
    auto gen = rng.stream(SeededRng::kStructureTrial, kSolutionStream);
    std::unordered_set<Solution, SolutionHash> seen;
    while (solutions.size() < spec.m) {
      Solution s(spec.n);
      for (std::size_t j = 0; j < spec.n; ++j) s.set(j, gen() >> 63);
      if (seen.insert(s).second) solutions.push_back(std::move(s));
    }
  } else {
    const std::uint64_t count = std::uint64_t{1} << spec.n;
    solutions.reserve(count);
    for (std::uint64_t k = 0; k < count; ++k) solutions.push_back(Solution::from_rank(spec.n, k));
  }

  std::vector<Fixed> tails(solutions.size());
  if (spec.family == Family::knapsack) {
    const auto item = knapsack_item_weights(spec.n);
    for (std::size_t z = 0; z < solutions.size(); ++z) {
      std::int64_t w = 0;
      for (std::size_t j = 0; j < spec.n; ++j)
        if (solutions[z][j]) w += static_cast<std::int64_t>(item[j]);
      tails[z] = Fixed{-w};
    }
  } else {
    // Distinct tails by rejection on collision.
    auto gen = rng.stream(SeededRng::kStructureTrial, kTailStream);
    const std::int64_t one = fmt.one().raw;
    std::set<std::int64_t> used;
    for (auto& t : tails) {
      std::int64_t v;
      do {
        v = -one + static_cast<std::int64_t>(uniform_below(gen, static_cast<std::uint64_t>(2 * one)));
      } while (!used.insert(v).second);
      t = Fixed{v};
    }
  }

  const WeightSampler sampler(weight_distribution(spec), spec.d, spec.n, fmt);
  return Instance(spec.n, spec.d, fmt, Epsilon{spec.epsilon_exponent}, spec.phi, std::move(solutions),
                  sampler.sample_matrix(rng, trial), std::move(tails));
}

}  // namespace pareto_smooth
