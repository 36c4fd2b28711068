#include "pareto_smooth/sampling/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pareto_smooth {

std::string_view to_string(DistributionKind kind) {
  switch (kind) {
    case DistributionKind::uniform_band:
      return "uniform_band";
    case DistributionKind::truncated_gaussian:
      return "truncated_gaussian";
    case DistributionKind::uniform_full:
      return "uniform_full";
  }
  return "?";
}

DistributionKind distribution_kind_from_string(std::string_view name) {
  if (name == "uniform_band") return DistributionKind::uniform_band;
  if (name == "truncated_gaussian") return DistributionKind::truncated_gaussian;
  if (name == "uniform_full") return DistributionKind::uniform_full;
  throw std::invalid_argument("unknown distribution \"" + std::string(name) + "\"");
}

namespace {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double truncated_peak(double mu, double sigma) {
  const double mass = normal_cdf((1.0 - mu) / sigma) - normal_cdf((-1.0 - mu) / sigma);
  return 1.0 / (sigma * std::sqrt(2.0 * std::numbers::pi) * mass);
}

}  // namespace

double truncated_gaussian_sigma(double mu, double phi) {
  if (!(phi > 0.5)) throw std::invalid_argument("truncated_gaussian: phi must exceed 1/2");
  if (mu < -1.0 || mu > 1.0) throw std::invalid_argument("truncated_gaussian: center outside [-1, 1]");
  // sigma * mass(sigma) is increasing in sigma, so the peak is decreasing.
  double lo = 1e-9;
  double hi = 1.0;
  while (truncated_peak(mu, hi) > phi) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (truncated_peak(mu, mid) > phi)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

WeightSampler::WeightSampler(const WeightDistribution& dist, std::size_t d, std::size_t n, FixedFormat fmt)
    : dist_(dist), d_(d), n_(n), fmt_(fmt), entries_(d * n) {
  if (!dist.centers.empty() && dist.centers.size() != d * n)
    throw std::invalid_argument("weight distribution: centers must be d x n");
  if (!(dist.phi > 0.0)) throw std::invalid_argument("weight distribution: phi must be positive");
  const std::int64_t one = fmt.one().raw;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    const double mu = dist.centers.empty() ? dist.default_center : dist.centers[k];
    if (!(mu >= -1.0 && mu <= 1.0)) throw std::invalid_argument("weight distribution: center outside [-1, 1]");
    Entry& e = entries_[k];
    switch (dist.kind) {
      case DistributionKind::uniform_band: {
        if (dist.phi < 0.5) throw std::invalid_argument("uniform_band: phi must be at least 1/2");
        // ceil keeps the per-cell density at or below phi
        e.width = static_cast<std::uint64_t>(std::ceil(std::ldexp(1.0 / dist.phi, fmt.frac_bits)));
        const auto width = static_cast<std::int64_t>(e.width);
        std::int64_t lo = fmt.quantize(mu - 0.5 / dist.phi).raw;
        lo = std::clamp(lo, -one, one - width);
        e.lo = lo;
        break;
      }
      case DistributionKind::uniform_full:
        if (dist.phi < 0.5) throw std::invalid_argument("uniform_full: declared phi must be at least 1/2");
        e.lo = -one;
        e.width = static_cast<std::uint64_t>(2 * one);
        break;
      case DistributionKind::truncated_gaussian:
        e.mu = mu;
        e.sigma = truncated_gaussian_sigma(mu, dist.phi);
        break;
    }
  }
}

double WeightSampler::density_peak() const {
  switch (dist_.kind) {
    case DistributionKind::uniform_band:
      return std::ldexp(1.0, fmt_.frac_bits) / static_cast<double>(entries_.empty() ? 1 : entries_[0].width);
    case DistributionKind::uniform_full:
      return 0.5;
    case DistributionKind::truncated_gaussian: {
      double peak = 0.0;
      for (const auto& e : entries_) peak = std::max(peak, truncated_peak(e.mu, e.sigma));
      return peak;
    }
  }
  return dist_.phi;
}

Fixed WeightSampler::sample(std::size_t i, std::size_t j, SplitMix64& gen) const {
  const Entry& e = entries_[i * n_ + j];
  if (dist_.kind == DistributionKind::truncated_gaussian) {
    for (;;) {
      const double v = e.mu + e.sigma * standard_normal(gen);
      // [-1, 1) keeps the quantized value inside [-1, 1]
      if (v >= -1.0 && v < 1.0) return fmt_.quantize(v);
    }
  }
  return {e.lo + static_cast<std::int64_t>(uniform_below(gen, e.width))};
}

Fixed WeightSampler::sample(std::size_t i, std::size_t j, const SeededRng& rng, std::uint64_t trial) const {
  auto gen = rng.stream(trial, i * n_ + j);
  return sample(i, j, gen);
}

FixedMatrix WeightSampler::sample_matrix(const SeededRng& rng, std::uint64_t trial) const {
  FixedMatrix w(d_, n_);
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = 0; j < n_; ++j) w(i, j) = sample(i, j, rng, trial);
  return w;
}

FixedMatrix sample_weights(const WeightDistribution& dist, std::size_t n, std::size_t d, const SeededRng& rng,
                           std::uint64_t trial, FixedFormat fmt) {
  return WeightSampler(dist, d, n, fmt).sample_matrix(rng, trial);
}

}  // namespace pareto_smooth
