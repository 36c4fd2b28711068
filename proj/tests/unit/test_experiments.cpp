#include <doctest.h>

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "helpers.hpp"
#include "pareto_smooth/experiments/bounds.hpp"
#include "pareto_smooth/experiments/campaigns.hpp"
#include "pareto_smooth/experiments/parallel.hpp"
#include "pareto_smooth/experiments/report.hpp"
#include "pareto_smooth/experiments/stats.hpp"
#include "pareto_smooth/pareto/pareto.hpp"

using namespace pareto_smooth;

namespace {

const Verdict& verdict(const ExperimentReport& r, const std::string& name) {
  for (const auto& v : r.verdicts)
    if (v.name == name) return v;
  FAIL("missing verdict " << name);
  return r.verdicts.front();
}

}  // namespace

TEST_CASE("main theorem and counting lemma bound examples") {
  CHECK(main_theorem_bound(10, 1, 1.0).value == 800.0);
  CHECK(main_theorem_bound(1, 1, 0.25).value == 2.0);
  const double d3 = main_theorem_bound(10, 3, 1.0).value;
  CHECK(d3 == doctest::Approx(2.0 * std::pow(12.0, 6) * 1e6).epsilon(1e-12));
  CHECK(d3 == doctest::Approx(5.97e12).epsilon(1e-3));
  CHECK(counting_lemma_bound(10, 1, 1.0).value == 800.0);
  CHECK(counting_lemma_bound(1, 1, 0.25).value == 2.0);
  CHECK(counting_lemma_bound(10, 3, 1.0).value == d3);
  const BoundValue huge = main_theorem_bound(1e6, 40, 8.0);
  CHECK(huge.overflow);
  CHECK(std::isinf(huge.value));
  CHECK_FALSE(main_theorem_bound(10, 2, 1.0).overflow);
  CHECK_THROWS_AS(main_theorem_bound(0.5, 1, 1.0), std::invalid_argument);
}

TEST_CASE("OK lemma bound examples") {
  CHECK(ok_lemma_bound(3, 1, 1.0, std::ldexp(1.0, -10)) == 0.125);
  CHECK(ok_lemma_bound(3, 2, 1.0, std::ldexp(1.0, -10)) == 0.25);
  CHECK(ok_lemma_bound(3, 1, 1.0, std::ldexp(1.0, -60)) < 1e-15);
}

TEST_CASE("wilson interval against the closed form and known values") {
  // p = 0, n = 100, z = 2.326: upper = z^2 / (n + z^2).
  const double z = kZ99OneSided;
  CHECK(wilson_upper(0, 100) == doctest::Approx(z * z / (100 + z * z)).epsilon(1e-12));
  CHECK(wilson_lower(0, 100) == 0.0);
  CHECK(wilson_upper(100, 100) == 1.0);
  // p = 1/2: center 1/2, half-width z sqrt(1/(4n) + z^2/(4n^2)) / (1 + z^2/n).
  const double n = 400;
  const double half = z * std::sqrt(0.25 / n + z * z / (4 * n * n)) / (1 + z * z / n);
  CHECK(wilson_upper(200, 400) == doctest::Approx(0.5 + half).epsilon(1e-12));
  CHECK(wilson_lower(200, 400) == doctest::Approx(0.5 - half).epsilon(1e-12));
  CHECK(wilson_upper(3, 1000) > 0.003);
  CHECK(wilson_upper(3, 1000) < wilson_upper(4, 1000));
  CHECK_THROWS_AS(wilson_upper(0, 0), std::invalid_argument);
}

TEST_CASE("stable sum is order independent") {
  std::vector<double> v;
  SplitMix64 g(4);
  for (int k = 0; k < 1001; ++k) v.push_back(uniform01(g) * std::pow(10.0, static_cast<int>(g() % 12) - 6));
  const double a = stable_sum(v);
  std::reverse(v.begin(), v.end());
  const double b = stable_sum(v);
  std::rotate(v.begin(), v.begin() + 300, v.end());
  CHECK(a == b);
  CHECK(stable_sum(v) == a);
  CHECK(stable_sum({}) == 0.0);
}

TEST_CASE("summary statistics") {
  const std::vector<double> one(5, 1.0);
  const auto s = summarize(one);
  CHECK(s.mean == 1.0);
  CHECK(s.std_error == 0.0);
  const std::vector<double> v{1, 2, 3, 4};
  const auto t = summarize(v);
  CHECK(t.mean == 2.5);
  // sample sd = sqrt(5/3), se = sd / 2
  CHECK(t.std_error == doctest::Approx(std::sqrt(5.0 / 3.0) / 2.0));
  CHECK(t.min == 1);
  CHECK(t.max == 4);
  CHECK(t.count == 4);
}

TEST_CASE("log-log slope fits") {
  std::vector<std::pair<double, double>> quad;
  std::vector<std::pair<double, double>> lin;
  for (double n : {8.0, 16.0, 32.0, 64.0}) {
    quad.emplace_back(n, n * n);
    lin.emplace_back(n, 3 * n);
  }
  const SlopeFit q = fit_loglog_slope(quad);
  CHECK(q.slope == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(q.std_error == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(fit_loglog_slope(lin).slope == doctest::Approx(1.0).epsilon(1e-12));

  SplitMix64 g(10);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<std::pair<double, double>> noisy;
    for (double n : {8.0, 12.0, 16.0, 24.0, 32.0, 48.0, 64.0})
      noisy.emplace_back(n, n * n * (1.0 + 0.1 * (2 * uniform01(g) - 1)));
    const SlopeFit f = fit_loglog_slope(noisy);
    CHECK(f.slope >= 1.8);
    CHECK(f.slope <= 2.2);
    CHECK(f.ci_low <= f.slope);
    CHECK(f.ci_high >= f.slope);
  }
  CHECK_THROWS_AS(fit_loglog_slope(std::vector<std::pair<double, double>>{{1, 1}, {2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(fit_loglog_slope(std::vector<std::pair<double, double>>{{1, 1}, {2, 0}, {3, 3}}),
                  std::invalid_argument);
}

TEST_CASE("parallel_for runs every index once and propagates errors") {
  for (std::size_t workers : {1U, 2U, 7U}) {
    std::vector<std::atomic<int>> seen(1000);
    parallel_for(1000, [&](std::size_t k) { seen[k].fetch_add(1); }, workers);
    for (auto& s : seen) CHECK(s.load() == 1);
    CHECK_THROWS_AS(parallel_for(100, [](std::size_t k) { if (k == 37) throw std::runtime_error("x"); }, workers),
                    std::runtime_error);
  }
  CHECK(worker_count(0) == 1);
  CHECK(worker_count(1) == 1);
  setenv("PARETO_SMOOTH_THREADS", "1", 1);
  CHECK(worker_count(100) == 1);
  unsetenv("PARETO_SMOOTH_THREADS");
}

TEST_CASE("po count: single-solution family has mean 1 and zero variance") {
  ExperimentConfig cfg;
  cfg.generator.family = Family::random_subset;
  cfg.generator.m = 1;
  cfg.generator.n = 5;
  cfg.trials = 20;
  const auto r = estimate_po_count(cfg);
  REQUIRE(r.grid.size() == 1);
  CHECK(r.grid[0].stats.mean == 1.0);
  CHECK(r.grid[0].stats.std_error == 0.0);
  CHECK(r.all_pass());
}

TEST_CASE("po count: full cube d = 2 stays below the main theorem bound") {
  ExperimentConfig cfg;
  cfg.generator.n = 10;
  cfg.generator.d = 2;
  cfg.trials = 20;
  const auto r = estimate_po_count(cfg);
  CHECK(r.grid[0].stats.max <= main_theorem_bound(10, 2, 1.0).value);
  CHECK(verdict(r, "po_count_within_main_theorem_bound").pass);
  CHECK(r.metric("max_count_over_bound") < 0.01);
}

TEST_CASE("po count: knapsack shortcut agrees with the sweep") {
  // The campaign counts knapsack optima with Nemhauser-Ullmann; compare with the sweep
  // over the generated cube, including centers that make some profits negative.
  for (double center : {0.5, 0.0, -0.3}) {
    ExperimentConfig cfg;
    cfg.generator.family = Family::knapsack;
    cfg.generator.n = 9;
    cfg.generator.center = center;
    cfg.generator.seed = 17;
    cfg.trials = 15;
    const auto r = estimate_po_count(cfg);
    std::vector<double> direct;
    for (std::uint64_t k = 0; k < cfg.trials; ++k)
      direct.push_back(static_cast<double>(pareto_sweep(generate_instance(cfg.generator, k)).optima.size()));
    CHECK(r.grid[0].stats.mean == summarize(direct).mean);
    CHECK(r.grid[0].stats.max == summarize(direct).max);
  }
}

TEST_CASE("po count: slope verdict on the knapsack model") {
  ExperimentConfig cfg;
  cfg.generator.family = Family::knapsack;
  cfg.generator.center = 0.5;
  cfg.n_grid = {8, 16, 32};
  cfg.trials = 60;
  cfg.slope_range = std::pair{1.5, 2.3};
  const auto r = estimate_po_count(cfg);
  REQUIRE(r.slopes.size() == 1);
  CHECK(r.slopes[0].fit.slope > 1.3);
  CHECK(r.slopes[0].fit.slope < 2.5);
}

TEST_CASE("reports are deterministic across runs and pool sizes") {
  ExperimentConfig cfg;
  cfg.generator.n = 6;
  cfg.generator.d = 2;
  cfg.n_grid = {3, 4, 5};
  cfg.trials = 40;
  const std::string a = report_to_json(estimate_po_count(cfg));
  setenv("PARETO_SMOOTH_THREADS", "1", 1);
  const std::string b = report_to_json(estimate_po_count(cfg));
  unsetenv("PARETO_SMOOTH_THREADS");
  CHECK(a == b);
  CHECK(report_to_csv(estimate_po_count(cfg)) == report_to_csv(estimate_po_count(cfg)));
  cfg.generator.seed = 2;
  CHECK(report_to_json(estimate_po_count(cfg)) != a);
}

TEST_CASE("ok probability test, vacuous bound and negative control") {
  ExperimentConfig cfg;
  cfg.generator.n = 3;
  cfg.generator.d = 1;
  cfg.generator.distribution = DistributionKind::uniform_full;
  cfg.generator.phi = 0.5;
  cfg.trials = 20000;
  const auto r = ok_probability_test(cfg);
  CHECK(r.all_pass());
  CHECK(r.metric("not_ok_rate") < 0.125 / 4);

  ExperimentConfig loose = cfg;
  loose.generator.epsilon_exponent = 3;
  loose.generator.frac_bits = 30;
  loose.trials = 200;
  const auto v = ok_probability_test(loose);
  CHECK(v.verdicts[0].pass);
  CHECK(v.verdicts[0].inconclusive);
  CHECK_FALSE(v.warnings.empty());

  ExperimentConfig control = cfg;
  control.checker_gap_multiplier = 100.0;
  control.trials = 5000;
  const auto c = ok_probability_test(control);
  CHECK_FALSE(c.all_pass());
}

TEST_CASE("boundedness test: far box never hit, near box within bound at small scale") {
  ExperimentConfig cfg;
  cfg.generator.n = 4;
  cfg.generator.d = 1;
  cfg.generator.epsilon_exponent = 6;
  cfg.trials = 20000;
  cfg.target_box_offset = 1000;
  const auto far = boundedness_test(cfg);
  CHECK(far.metric("hits") == 0.0);
  CHECK(far.verdicts[0].pass);
  CHECK(far.verdicts[0].inconclusive);

  cfg.target_box_offset = 0;
  const auto near = boundedness_test(cfg);
  CHECK(near.metric("dim_b") >= 1.0);
  CHECK(near.metric("hits") > 0.0);
  // The lower confidence bound must not exceed the theoretical value.
  CHECK(wilson_lower(static_cast<std::size_t>(near.metric("hits")), cfg.trials) <= near.metric("bound"));

  ExperimentConfig d2;
  d2.generator.n = 3;
  d2.generator.d = 2;
  d2.generator.epsilon_exponent = 3;
  d2.generator.frac_bits = 30;
  d2.trials = 20000;
  const auto b2 = boundedness_test(d2);
  CHECK(wilson_lower(static_cast<std::size_t>(b2.metric("hits")), d2.trials) <= b2.metric("bound"));
  ExperimentConfig d3 = d2;
  d3.generator.d = 3;
  CHECK_THROWS_AS(boundedness_test(d3), std::invalid_argument);
}

TEST_CASE("uniqueness fuzz campaign at small scale") {
  ExperimentConfig cfg;
  cfg.n_grid = {2, 3, 4, 5};
  cfg.d_grid = {1, 2, 3};
  cfg.trials = 60;
  const auto r = uniqueness_fuzz(cfg);
  CHECK(r.all_pass());
  CHECK(r.metric("roundtrip_failures") == 0.0);
  CHECK(r.metric("negative_controls_detected") == r.metric("negative_controls_built"));
  CHECK(r.metric("negative_controls_built") > 0.0);
  CHECK(report_to_json(uniqueness_fuzz(cfg)) == report_to_json(r));
}

TEST_CASE("index vectors enumeration") {
  // d = 2, n = 3: (bot|3 choices) x (bot|3 choices) minus equal pairs = 16 - 3 = 13.
  CHECK(all_index_vectors(3, 2).size() == 13);
  CHECK(all_index_vectors(1, 1).size() == 2);
  for (const auto& j : all_index_vectors(4, 3)) CHECK(j.valid(4));
}

TEST_CASE("A-count examples") {
  const auto d1 = a_count_details(3, 1);
  for (const auto& e : d1) {
    CHECK(e.count == e.two_pow_sum);  // d = 1: J = (bot) gives 1, J = (j) gives 2
    REQUIRE(e.literal_count.has_value());
    CHECK(*e.literal_count == e.count);
  }
  for (const auto& e : a_count_details(2, 2)) {
    if (e.j[0] == 0U && e.j[1] == 1U) CHECK(e.count == 8);
    if (e.j.count() == 0) CHECK(e.count == 1);
    CHECK(e.count == e.two_pow_triangle);
    CHECK(e.count <= e.two_pow_sum);
    CHECK(*e.literal_count == e.count);
  }
  // J = (bot, j): only one row, one free bit pattern: x^j decides the single non-bottom entry.
  for (const auto& e : a_count_details(1, 2))
    if (!e.j[0] && e.j[1]) {
      CHECK(e.count == 2);
      CHECK(e.two_pow_sum == 4);
    }
  CHECK(a_count_check(3, 1));
  CHECK_FALSE(a_count_check(2, 2));
}

TEST_CASE("report renderers") {
  const auto r = a_count_report(3, 2);
  const std::string json = report_to_json(r);
  CHECK(json.find("\"campaign\"") != std::string::npos);
  CHECK(json.find("count_equals_two_pow_triangle") != std::string::npos);
  const std::string csv = report_to_csv(r);
  CHECK(csv.rfind("campaign,n,d,metric,value", 0) == 0);
  CHECK(report_to_svg(r).find("<svg") != std::string::npos);
  CHECK(report_summary(r).find("a-count") != std::string::npos);

  ExperimentConfig cfg;
  cfg.n_grid = {3, 4, 5};
  cfg.trials = 10;
  const auto po = estimate_po_count(cfg);
  const std::string svg = report_to_svg(po);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  std::size_t rows = 0;
  const std::string pcsv = report_to_csv(po);
  for (char c : pcsv) rows += c == '\n';
  CHECK(rows > 3 * 4);
}
