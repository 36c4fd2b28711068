#include "pareto_smooth/experiments/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pareto_smooth {

namespace {

double wilson(std::size_t successes, std::size_t trials, double z, double sign) {
  if (trials == 0) throw std::invalid_argument("wilson: no trials");
  const double nn = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / nn;
  const double z2 = z * z;
  const double center = p + z2 / (2.0 * nn);
  const double spread = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn));
  return std::clamp((center + sign * spread) / (1.0 + z2 / nn), 0.0, 1.0);
}

double pairwise(const double* v, std::size_t count) {
  if (count <= 8) {
    double s = 0.0;
    for (std::size_t k = 0; k < count; ++k) s += v[k];
    return s;
  }
  const std::size_t half = count / 2;
  return pairwise(v, half) + pairwise(v + half, count - half);
}

}  // namespace

double wilson_upper(std::size_t successes, std::size_t trials, double z) { return wilson(successes, trials, z, 1.0); }
double wilson_lower(std::size_t successes, std::size_t trials, double z) { return wilson(successes, trials, z, -1.0); }

double stable_sum(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return pairwise(values.data(), values.size());
}

SummaryStats summarize(std::span<const double> samples) {
  SummaryStats s;
  s.count = samples.size();
  if (samples.empty()) return s;
  const double nn = static_cast<double>(samples.size());
  s.mean = stable_sum({samples.begin(), samples.end()}) / nn;
  std::vector<double> sq;
  sq.reserve(samples.size());
  for (double v : samples) sq.push_back((v - s.mean) * (v - s.mean));
  if (samples.size() > 1) s.std_error = std::sqrt(stable_sum(std::move(sq)) / (nn - 1.0) / nn);
  const auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
  s.min = *lo;
  s.max = *hi;
  return s;
}

SlopeFit fit_loglog_slope(std::span<const std::pair<double, double>> points) {
  if (points.size() < 3) throw std::invalid_argument("fit_loglog_slope: need at least 3 points");
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& [n, mean] : points) {
    if (!(n > 0.0) || !(mean > 0.0)) throw std::invalid_argument("fit_loglog_slope: n and mean must be positive");
    xs.push_back(std::log(n));
    ys.push_back(std::log(mean));
  }
  const double k = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= k;
  my /= k;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (!(sxx > 0.0)) throw std::invalid_argument("fit_loglog_slope: n values must not all coincide");
  SlopeFit fit;
  fit.points = xs.size();
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double rss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    rss += r * r;
  }
  fit.std_error = std::sqrt(rss / (k - 2.0) / sxx);
  fit.ci_low = fit.slope - 1.96 * fit.std_error;
  fit.ci_high = fit.slope + 1.96 * fit.std_error;
  return fit;
}

}  // namespace pareto_smooth
