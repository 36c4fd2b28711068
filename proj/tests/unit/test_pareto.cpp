#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "pareto_smooth/pareto/nemhauser_ullmann.hpp"
#include "pareto_smooth/pareto/pareto.hpp"

using namespace pareto_smooth;

namespace {

std::vector<Fixed> fx(std::initializer_list<std::int64_t> v) {
  std::vector<Fixed> out;
  for (auto x : v) out.push_back({x});
  return out;
}

// Independent oracle: all-pairs Pareto check on integer vectors (maximize every coordinate).
std::set<std::size_t> oracle_optima(const Instance& inst) {
  const std::size_t m = inst.solutions().size();
  std::vector<std::vector<std::int64_t>> v(m);
  for (std::size_t z = 0; z < m; ++z) {
    for (std::size_t i = 0; i < inst.d(); ++i) {
      std::int64_t acc = 0;
      for (std::size_t c = 0; c < inst.n(); ++c)
        if (inst.solution(z)[c]) acc += inst.weights()(i, c).raw;
      v[z].push_back(acc);
    }
    v[z].push_back(inst.tail_objectives()[z].raw);
  }
  std::set<std::size_t> out;
  for (std::size_t p = 0; p < m; ++p) {
    bool dominated = false;
    for (std::size_t q = 0; q < m && !dominated; ++q) {
      if (q == p) continue;
      bool ge = true;
      for (std::size_t i = 0; i < v[p].size(); ++i) ge = ge && v[q][i] >= v[p][i];
      dominated = ge;
    }
    if (!dominated) out.insert(p);
  }
  return out;
}

using Point = KnapsackPoint<std::int64_t, std::int64_t>;

std::vector<Point> brute_knapsack(const std::vector<std::int64_t>& p, const std::vector<std::int64_t>& w) {
  std::vector<Point> all;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p.size()); ++mask) {
    Point pt;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (mask >> i & 1) {
        pt.profit += p[i];
        pt.weight += w[i];
      }
    all.push_back(pt);
  }
  std::vector<Point> front;
  for (const auto& a : all) {
    bool dominated = false;
    for (const auto& b : all)
      dominated = dominated || (b.profit >= a.profit && b.weight <= a.weight &&
                                (b.profit > a.profit || b.weight < a.weight));
    if (!dominated && std::find(front.begin(), front.end(), a) == front.end()) front.push_back(a);
  }
  std::sort(front.begin(), front.end(), [](const Point& a, const Point& b) { return a.weight < b.weight; });
  return front;
}

}  // namespace

TEST_CASE("dominates and t_dominates examples") {
  CHECK(dominates(fx({3, 4}), fx({3, 4})));
  CHECK_FALSE(dominates(fx({1, 0}), fx({0, 1})));
  CHECK_FALSE(dominates(fx({0, 1}), fx({1, 0})));
  CHECK(dominates(fx({2, 3, 5}), fx({2, 1, 5})));
  CHECK_THROWS_AS(dominates(fx({1}), fx({1, 2})), std::invalid_argument);

  CHECK(t_dominates(fx({7, -3}), fx({7, -3}), 2));
  CHECK(t_dominates(fx({5, 0}), fx({4, 9}), 1));
  CHECK_FALSE(t_dominates(fx({5, 0}), fx({4, 9}), 2));
  CHECK_THROWS_AS(t_dominates(fx({5, 0}), fx({4, 9}), 3), std::invalid_argument);
  CHECK_THROWS_AS(t_dominates(fx({5, 0}), fx({4, 9}), 0), std::invalid_argument);
}

TEST_CASE("pareto sweep on tiny instances") {
  const FixedFormat f{8};
  FixedMatrix w(1, 2);
  w(0, 0) = {100};
  w(0, 1) = {-50};
  const Instance one(2, 1, f, Epsilon{4}, 1.0, {Solution::from_string("01")}, w, {{3}});
  CHECK(pareto_sweep(one).optima == std::vector<std::size_t>{0});
  CHECK(brute_force_pareto(one).optima == std::vector<std::size_t>{0});

  // "10" beats "01" on W and on the tail.
  const Instance two(2, 1, f, Epsilon{4}, 1.0, {Solution::from_string("01"), Solution::from_string("10")}, w,
                     {{3}, {5}});
  CHECK(pareto_sweep(two).optima == std::vector<std::size_t>{1});
  CHECK(brute_force_pareto(two).optima == std::vector<std::size_t>{1});
  CHECK(pareto_sweep(two).points.front() == fx({100, 5}));

  const Instance none(2, 1, f, Epsilon{4}, 1.0, {}, w, {});
  CHECK(brute_force_pareto(none).optima.empty());
  CHECK(pareto_sweep(none).optima.empty());
}

TEST_CASE("all-ones solution is optimal under positive weights") {
  const FixedFormat f{8};
  FixedMatrix w(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t c = 0; c < 3; ++c) w(i, c) = {i == c ? 256 : 1};
  std::vector<Solution> sols;
  std::vector<Fixed> tails;
  for (std::uint64_t r = 0; r < 8; ++r) {
    sols.push_back(Solution::from_rank(3, r));
    tails.push_back({static_cast<std::int64_t>(r * 7 % 8)});
  }
  const Instance inst(3, 3, f, Epsilon{4}, 1.0, sols, w, tails);
  const auto po = brute_force_pareto(inst).optima;
  CHECK(std::find(po.begin(), po.end(), 7U) != po.end());
  CHECK(pareto_sweep(inst).optima == po);
}

TEST_CASE("pareto sweep matches the all-pairs oracle on random instances") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const std::size_t n = 2 + seed % 7;
    const std::size_t d = 1 + seed % 3;
    const std::size_t m = 1 + seed % std::min<std::uint64_t>(40, std::uint64_t{1} << n);
    const Instance inst = test_support::random_instance(seed, n, d, m, 3, 1);
    const auto sweep = pareto_sweep(inst);
    const auto brute = brute_force_pareto(inst);
    const auto expect = oracle_optima(inst);
    CHECK(std::set<std::size_t>(sweep.optima.begin(), sweep.optima.end()) == expect);
    CHECK(sweep.optima == brute.optima);
    CHECK(sweep.points == brute.points);
    CHECK(std::is_sorted(sweep.optima.begin(), sweep.optima.end()));
  }
}

TEST_CASE("sweep observer sees the kept set grow in decreasing tail order") {
  const Instance inst = test_support::random_instance(77, 6, 2, 30);
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> last;
  pareto_sweep(inst, [&](std::span<const std::size_t> kept) {
    sizes.push_back(kept.size());
    last.assign(kept.begin(), kept.end());
  });
  CHECK(sizes.size() == 30);
  CHECK(std::is_sorted(sizes.begin(), sizes.end()));
  std::sort(last.begin(), last.end());
  CHECK(last == pareto_sweep(inst).optima);
}

TEST_CASE("objective points carry W x and the tail") {
  const Instance inst = test_support::random_instance(4, 5, 2, 10);
  const auto pts = objective_points(inst);
  REQUIRE(pts.size() == 10);
  const auto lin = inst.linear_objectives();
  for (std::size_t z = 0; z < 10; ++z) {
    CHECK(pts[z].size() == 3);
    CHECK(pts[z][0] == lin[z * 2]);
    CHECK(pts[z][1] == lin[z * 2 + 1]);
    CHECK(pts[z][2] == inst.tail_objectives()[z]);
  }
}

TEST_CASE("nemhauser-ullmann examples") {
  const std::vector<std::int64_t> empty;
  const auto zero = nemhauser_ullmann(empty, empty);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0] == std::vector<Point>{{0, 0}});

  const auto two = nemhauser_ullmann(std::vector<std::int64_t>{1, 2}, std::vector<std::int64_t>{1, 1});
  REQUIRE(two.size() == 3);
  CHECK(two[2] == std::vector<Point>{{0, 0}, {2, 1}, {3, 2}});
  CHECK(two[1] == std::vector<Point>{{0, 0}, {1, 1}});

  CHECK_THROWS_AS(nemhauser_ullmann(std::vector<std::int64_t>{-1}, std::vector<std::int64_t>{1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(nemhauser_ullmann(std::vector<std::int64_t>{1}, std::vector<std::int64_t>{}),
                  std::invalid_argument);
}

TEST_CASE("nemhauser-ullmann matches brute force on every prefix") {
  SplitMix64 gen(2024);
  for (int inst = 0; inst < 20; ++inst) {
    const std::size_t n = 1 + inst % 11;
    std::vector<std::int64_t> p(n);
    std::vector<std::int64_t> w(n);
    // A small range forces equal profits and weights.
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = static_cast<std::int64_t>(uniform_below(gen, inst % 2 ? 5 : 1000));
      w[i] = static_cast<std::int64_t>(uniform_below(gen, inst % 2 ? 5 : 1000));
    }
    const auto lists = nemhauser_ullmann(p, w);
    REQUIRE(lists.size() == n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      const std::vector<std::int64_t> pp(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k));
      const std::vector<std::int64_t> ww(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
      CHECK(lists[k] == brute_knapsack(pp, ww));
    }
  }
}

TEST_CASE("nemhauser-ullmann over fixed-point profits") {
  const std::vector<Fixed> p = fx({5, 3, 9});
  const std::vector<std::uint64_t> w = {1, 2, 4};
  const auto lists = nemhauser_ullmann(p, w);
  // Subsets by weight: {}:0, {0}:5, {1}:3, {0,1}:8, {2}:9, {0,2}:14, {1,2}:12, {0,1,2}:17.
  const std::vector<KnapsackPoint<Fixed, std::uint64_t>> expect = {
      {{0}, 0}, {{5}, 1}, {{8}, 3}, {{9}, 4}, {{14}, 5}, {{17}, 7}};
  CHECK(lists.back() == expect);
}
