#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace pareto_smooth {

/// z for a one-sided 99% bound.
inline constexpr double kZ99OneSided = 2.3263478740408408;

/// One-sided Wilson score bounds for a binomial proportion.
double wilson_upper(std::size_t successes, std::size_t trials, double z = kZ99OneSided);
double wilson_lower(std::size_t successes, std::size_t trials, double z = kZ99OneSided);

/// Pairwise summation over the values sorted ascending, so the result does
/// not depend on the order the samples arrived in.
double stable_sum(std::vector<double> values);

struct SummaryStats {
  std::size_t count = 0;
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(count)
  double min = 0.0;
  double max = 0.0;
};

SummaryStats summarize(std::span<const double> samples);

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double std_error = 0.0;
  double ci_low = 0.0;   // slope -/+ 1.96 standard errors
  double ci_high = 0.0;
  std::size_t points = 0;
};

/// Least-squares fit of log(mean) against log(n). Needs >= 3 points with
/// positive n and mean; throws std::invalid_argument otherwise.
SlopeFit fit_loglog_slope(std::span<const std::pair<double, double>> points);

}  // namespace pareto_smooth
