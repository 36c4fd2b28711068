#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "helpers.hpp"
#include "pareto_smooth/sampling/distribution.hpp"
#include "pareto_smooth/sampling/generator.hpp"
#include "pareto_smooth/sampling/ok_event.hpp"
#include "pareto_smooth/sampling/rng.hpp"

using namespace pareto_smooth;

namespace {

bool ok_all_pairs(const Instance& inst) {
  const auto lin = inst.linear_objectives();
  const std::int64_t eps = inst.epsilon().in(inst.format()).raw;
  const std::size_t m = inst.solutions().size();
  for (std::size_t i = 0; i < inst.d(); ++i)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        if (std::llabs(lin[a * inst.d() + i].raw - lin[b * inst.d() + i].raw) <= eps) return false;
  return true;
}

double gaussian_peak_oracle(double mu, double sigma) {
  // Density at the mode of N(mu, sigma^2) restricted to [-1, 1], by trapezoid integration.
  const int steps = 200000;
  double mass = 0.0;
  const double h = 2.0 / steps;
  for (int k = 0; k <= steps; ++k) {
    const double x = -1.0 + k * h;
    const double v = std::exp(-0.5 * (x - mu) * (x - mu) / (sigma * sigma));
    mass += (k == 0 || k == steps) ? 0.5 * v : v;
  }
  mass *= h;
  return 1.0 / mass;  // mode value exp(0) = 1, mode inside [-1, 1]
}

}  // namespace

TEST_CASE("rng streams are deterministic and distinct") {
  const SeededRng a(42);
  const SeededRng b(42);
  auto s1 = a.stream(3, 7);
  auto s2 = b.stream(3, 7);
  for (int k = 0; k < 100; ++k) CHECK(s1() == s2());
  auto t1 = a.stream(3, 8);
  auto t2 = a.stream(4, 7);
  auto t3 = SeededRng(43).stream(3, 7);
  auto base = a.stream(3, 7);
  const auto v = base();
  CHECK(t1() != v);
  CHECK(t2() != v);
  CHECK(t3() != v);

  SplitMix64 g(1);
  std::vector<int> hist(7, 0);
  for (int k = 0; k < 70000; ++k) ++hist[uniform_below(g, 7)];
  for (int c : hist) CHECK(std::abs(c - 10000) < 500);
  for (int k = 0; k < 1000; ++k) {
    const double u = uniform01(g);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  double sum = 0.0;
  double sq = 0.0;
  for (int k = 0; k < 100000; ++k) {
    const double z = standard_normal(g);
    sum += z;
    sq += z * z;
  }
  CHECK(std::abs(sum / 100000) < 0.02);
  CHECK(std::abs(sq / 100000 - 1.0) < 0.02);
}

TEST_CASE("uniform band with phi = 1 centered at 0 stays in [-1/2, 1/2)") {
  const FixedFormat f{30};
  WeightDistribution dist{DistributionKind::uniform_band, 1.0, {}, 0.0};
  const WeightSampler s(dist, 2, 5, f);
  CHECK(s.density_peak() == 1.0);
  const SeededRng rng(9);
  double lo = 1;
  double hi = -1;
  for (std::uint64_t t = 0; t < 20000; ++t) {
    const FixedMatrix w = s.sample_matrix(rng, t);
    for (Fixed v : w.data()) {
      lo = std::min(lo, f.to_double(v));
      hi = std::max(hi, f.to_double(v));
    }
  }
  CHECK(lo >= -0.5);
  CHECK(hi < 0.5);
  CHECK(lo < -0.49);
  CHECK(hi > 0.49);
}

TEST_CASE("uniform band is shifted inward near the edge of [-1, 1]") {
  const FixedFormat f{20};
  WeightDistribution dist{DistributionKind::uniform_band, 2.0, {0.95, -1.0}, 0.0};
  const WeightSampler s(dist, 1, 2, f);
  const SeededRng rng(1);
  for (std::uint64_t t = 0; t < 5000; ++t) {
    const double a = f.to_double(s.sample(0, 0, rng, t));
    const double b = f.to_double(s.sample(0, 1, rng, t));
    CHECK(a >= 0.5);
    CHECK(a < 1.0);
    CHECK(b >= -1.0);
    CHECK(b < -0.5);
  }
  CHECK(s.density_peak() <= 2.0);
  CHECK_THROWS_AS(WeightSampler(WeightDistribution{DistributionKind::uniform_band, 0.25, {}, 0.0}, 1, 1, f),
                  std::invalid_argument);
}

TEST_CASE("uniform full has mean near zero and stays in [-1, 1]") {
  const FixedFormat f{30};
  const WeightSampler s(WeightDistribution{DistributionKind::uniform_full, 0.5, {}, 0.0}, 1, 1, f);
  CHECK(s.density_peak() == 0.5);
  const SeededRng rng(5);
  double sum = 0.0;
  const int trials = 100000;
  for (int t = 0; t < trials; ++t) {
    const double v = f.to_double(s.sample(0, 0, rng, static_cast<std::uint64_t>(t)));
    CHECK(v >= -1.0);
    CHECK(v <= 1.0);
    sum += v;
  }
  // Standard deviation of U[-1,1] is 1/sqrt(3).
  const double se = 1.0 / std::sqrt(3.0) / std::sqrt(static_cast<double>(trials));
  CHECK(std::abs(sum / trials) < 3 * se);
}

TEST_CASE("truncated gaussian sigma keeps the density peak at phi") {
  for (double mu : {0.0, 0.4, -0.9, 1.0}) {
    for (double phi : {0.75, 1.0, 2.0, 8.0}) {
      const double sigma = truncated_gaussian_sigma(mu, phi);
      const double peak = gaussian_peak_oracle(mu, sigma);
      CHECK(peak <= phi * (1 + 1e-6));
      CHECK(peak >= phi * (1 - 1e-4));
    }
  }
  CHECK_THROWS_AS(truncated_gaussian_sigma(0.0, 0.5), std::invalid_argument);

  const FixedFormat f{30};
  const WeightSampler s(WeightDistribution{DistributionKind::truncated_gaussian, 2.0, {}, 0.3}, 1, 1, f);
  CHECK(s.density_peak() <= 2.0 + 1e-9);
  const SeededRng rng(8);
  double sum = 0.0;
  for (int t = 0; t < 20000; ++t) {
    const double v = f.to_double(s.sample(0, 0, rng, static_cast<std::uint64_t>(t)));
    CHECK(v >= -1.0);
    CHECK(v < 1.0);
    sum += v;
  }
  CHECK(std::abs(sum / 20000 - 0.3) < 0.02);
}

TEST_CASE("sampling is deterministic in the seed") {
  const FixedFormat f{30};
  const WeightDistribution dist{DistributionKind::truncated_gaussian, 1.5, {}, 0.0};
  const SeededRng rng(77);
  CHECK(sample_weights(dist, 6, 3, rng, 4, f) == sample_weights(dist, 6, 3, rng, 4, f));
  CHECK_FALSE(sample_weights(dist, 6, 3, rng, 4, f) == sample_weights(dist, 6, 3, rng, 5, f));
}

TEST_CASE("ok event examples and all-pairs oracle") {
  const FixedFormat f{8};
  FixedMatrix w(1, 2);
  w(0, 0) = {100};
  w(0, 1) = {100};
  const Instance single(2, 1, f, Epsilon{4}, 1.0, {Solution::from_string("10")}, w, {{0}});
  CHECK(ok_event(single));
  const Instance tie(2, 1, f, Epsilon{4}, 1.0, {Solution::from_string("10"), Solution::from_string("01")}, w,
                     {{0}, {1}});
  CHECK_FALSE(ok_event(tie));

  // Gap exactly epsilon is not OK; one unit more is.
  FixedMatrix g(1, 2);
  g(0, 0) = {16};
  const Instance edge(2, 1, f, Epsilon{4}, 1.0, {Solution::from_string("10"), Solution::from_string("01")}, g,
                      {{0}, {1}});
  CHECK_FALSE(ok_event(edge));
  g(0, 0) = {17};
  CHECK(ok_event(edge.with_weights(g)));

  int oks = 0;
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    const Instance inst = test_support::random_instance(seed, 4 + seed % 3, 1 + seed % 3,
                                                        2 + seed % 15, 16, 3 + static_cast<int>(seed % 6));
    const bool fast = ok_event(inst);
    CHECK(fast == ok_all_pairs(inst));
    oks += fast;
  }
  CHECK(oks > 10);
  CHECK(oks < 390);
}

TEST_CASE("generator families") {
  GeneratorSpec cube;
  cube.n = 3;
  cube.d = 2;
  const Instance a = generate_instance(cube);
  CHECK(a.solutions().size() == 8);
  std::set<std::string> seen;
  for (const auto& s : a.solutions()) seen.insert(s.to_string());
  CHECK(seen.size() == 8);

  GeneratorSpec sub;
  sub.family = Family::random_subset;
  sub.n = 8;
  sub.m = 10;
  const Instance b = generate_instance(sub);
  CHECK(b.solutions().size() == 10);
  std::set<std::string> distinct;
  for (const auto& s : b.solutions()) distinct.insert(s.to_string());
  CHECK(distinct.size() == 10);

  GeneratorSpec ks;
  ks.family = Family::knapsack;
  ks.n = 5;
  ks.center = 0.5;
  const Instance k = generate_instance(ks);
  const auto items = knapsack_item_weights(5);
  CHECK(items == std::vector<std::uint64_t>{1, 2, 4, 8, 16});
  for (std::size_t z = 0; z < k.solutions().size(); ++z) {
    std::int64_t expect = 0;
    for (std::size_t j = 0; j < 5; ++j)
      if (k.solution(z)[j]) expect -= static_cast<std::int64_t>(items[j]);
    CHECK(k.tail_objectives()[z].raw == expect);
  }
  for (Fixed v : k.weights().data()) {
    CHECK(v.raw >= 0);
    CHECK(v.raw < k.format().one().raw);
  }
}

TEST_CASE("generator: structure is shared across trials, weights are not") {
  GeneratorSpec sub;
  sub.family = Family::random_subset;
  sub.n = 10;
  sub.d = 2;
  sub.m = 50;
  sub.seed = 3;
  sub.random_centers = true;
  const Instance t0 = generate_instance(sub, 0);
  const Instance t1 = generate_instance(sub, 1);
  CHECK(std::equal(t0.solutions().begin(), t0.solutions().end(), t1.solutions().begin()));
  CHECK(std::equal(t0.tail_objectives().begin(), t0.tail_objectives().end(), t1.tail_objectives().begin()));
  CHECK_FALSE(t0.weights() == t1.weights());
  CHECK(generate_instance(sub, 1) == t1);
  sub.seed = 4;
  CHECK_FALSE(generate_instance(sub, 1) == t1);
}

TEST_CASE("generator validation") {
  GeneratorSpec s;
  s.frac_bits = 15;
  s.epsilon_exponent = 10;
  CHECK_THROWS_AS(validate(s), std::invalid_argument);
  s = GeneratorSpec{};
  s.family = Family::knapsack;
  s.d = 2;
  CHECK_THROWS_AS(validate(s), std::invalid_argument);
  s = GeneratorSpec{};
  s.family = Family::random_subset;
  s.n = 3;
  s.m = 9;
  CHECK_THROWS_AS(validate(s), std::invalid_argument);
  s.m = 8;
  CHECK_NOTHROW(validate(s));
  s = GeneratorSpec{};
  s.n = 30;
  CHECK_THROWS_AS(validate(s), std::invalid_argument);
  CHECK(family_from_string(to_string(Family::random_subset)) == Family::random_subset);
  CHECK_THROWS_AS(family_from_string("cube"), std::invalid_argument);
  CHECK(distribution_kind_from_string("uniform_full") == DistributionKind::uniform_full);
}
