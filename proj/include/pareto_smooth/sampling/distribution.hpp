#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pareto_smooth/core/fixed_point.hpp"
#include "pareto_smooth/sampling/rng.hpp"

namespace pareto_smooth {

enum class DistributionKind { uniform_band, truncated_gaussian, uniform_full };

std::string_view to_string(DistributionKind kind);
DistributionKind distribution_kind_from_string(std::string_view name);

/// The phi-semirandom model for one weight matrix: every entry W^i_j has its
/// own adversarial center mu^i_j in [-1, 1] and a density supported in
/// [-1, 1] whose supremum is at most phi.
///
///  - uniform_band: uniform on an interval of width 1/phi around the center,
///    shifted (not truncated) to stay inside [-1, 1]. Needs phi >= 1/2.
///  - truncated_gaussian: normal around the center truncated to [-1, 1], with
///    the smallest sigma whose truncated peak density is <= phi. Needs phi > 1/2.
///  - uniform_full: uniform on [-1, 1]; density 1/2, centers ignored.
struct WeightDistribution {
  DistributionKind kind = DistributionKind::uniform_band;
  double phi = 1.0;
  /// Row-major d x n centers; empty means every center equals default_center.
  std::vector<double> centers;
  double default_center = 0.0;
};

/// Smallest sigma such that N(mu, sigma^2) truncated to [-1, 1] has peak
/// density <= phi.
double truncated_gaussian_sigma(double mu, double phi);

/// Per-entry sampling parameters for a d x n matrix, precomputed once.
class WeightSampler {
 public:
  WeightSampler(const WeightDistribution& dist, std::size_t d, std::size_t n, FixedFormat fmt);

  std::size_t rows() const { return d_; }
  std::size_t cols() const { return n_; }
  const WeightDistribution& distribution() const { return dist_; }
  /// Supremum of the sampled density (<= dist.phi).
  double density_peak() const;

  Fixed sample(std::size_t i, std::size_t j, SplitMix64& gen) const;
  /// Entry (i, j) of trial `trial`, drawn from the substream (trial, i*n + j).
  Fixed sample(std::size_t i, std::size_t j, const SeededRng& rng, std::uint64_t trial) const;
  FixedMatrix sample_matrix(const SeededRng& rng, std::uint64_t trial) const;

 private:
  struct Entry {
    std::int64_t lo = 0;     // uniform: first grid point
    std::uint64_t width = 0; // uniform: number of grid points
    double mu = 0.0;         // gaussian
    double sigma = 0.0;
  };

  WeightDistribution dist_;
  std::size_t d_;
  std::size_t n_;
  FixedFormat fmt_;
  std::vector<Entry> entries_;
};

/// Independent entries for a d x n matrix, quantized to the F-bit grid.
FixedMatrix sample_weights(const WeightDistribution& dist, std::size_t n, std::size_t d, const SeededRng& rng,
                           std::uint64_t trial, FixedFormat fmt);

}  // namespace pareto_smooth
