#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pareto_smooth/core/transcript_types.hpp"
#include "pareto_smooth/experiments/bounds.hpp"
#include "pareto_smooth/experiments/stats.hpp"
#include "pareto_smooth/sampling/generator.hpp"

namespace pareto_smooth {

struct ExperimentConfig {
  GeneratorSpec generator;
  std::size_t trials = 100;
  /// Grid over n and d; an empty grid means the generator's own value.
  std::vector<std::size_t> n_grid;
  std::vector<std::size_t> d_grid;
  /// po-scaling: verdict on the fitted slope when set.
  std::optional<std::pair<double, double>> slope_range;
  /// ok-prob: the checker uses gap = multiplier * eps (1 for the real test).
  double checker_gap_multiplier = 1.0;
  /// boundedness: solution whose transcript is the target (default: first
  /// solution with a full index vector), and a lattice shift of the target.
  std::optional<std::size_t> target_solution;
  std::int64_t target_box_offset = 0;
};

struct GridPointReport {
  std::size_t n = 0;
  std::size_t d = 0;
  SummaryStats stats;
  BoundValue bound;
};

struct SlopeRecord {
  std::size_t d = 0;
  SlopeFit fit;
};

struct Verdict {
  std::string name;
  bool pass = false;
  bool inconclusive = false;
  double observed = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct ExperimentReport {
  std::string campaign;
  std::vector<GridPointReport> grid;
  std::vector<SlopeRecord> slopes;
  /// Named scalar results, in insertion order.
  std::vector<std::pair<std::string, double>> metrics;
  std::vector<Verdict> verdicts;
  std::vector<std::string> warnings;

  bool all_pass() const;
  double metric(const std::string& name) const;
};

/// Monte Carlo estimate of E[|PO|] on every grid point. The knapsack family
/// is counted with Nemhauser-Ullmann (so n may go up to 64); other families
/// build each instance and run the sweep. Throws std::logic_error if any
/// trial exceeds the main theorem bound.
ExperimentReport estimate_po_count(const ExperimentConfig& cfg);

/// Empirical Pr[not OK] with a one-sided 99% Wilson bound, compared to
/// phi d 2^{2n+1} eps.
ExperimentReport ok_probability_test(const ExperimentConfig& cfg);

/// Fixes x, a target transcript and the unmasked half of W (all from trial
/// 0), redraws only the masked entries `trials` times, and compares the hit
/// frequency of the target against (phi eps)^{dim(B)}.
ExperimentReport boundedness_test(const ExperimentConfig& cfg);

/// Round-trip campaign over `trials` instances with the OK event: for every
/// Pareto optimum x, checks recon(trans(x)) = x, transcript distinctness,
/// the masking equivalence, coordinate agreement and diagonalization.
/// n and d cycle through the grids; families alternate between all_vectors
/// and random_subset; eps = 2^{-(2n+8)}.
ExperimentReport uniqueness_fuzz(const ExperimentConfig& cfg);

struct ACountEntry {
  IndexVector j;
  std::uint64_t count = 0;              // exhaustive count of valid A
  std::uint64_t two_pow_sum = 0;        // 2^{sum(J)}
  std::uint64_t two_pow_triangle = 0;   // 2^{c(c+1)/2}, c = count(J)
  std::optional<std::uint64_t> literal_count;  // full-matrix enumeration when small
};

/// Every index vector for (n, d) with its exhaustive diagonalization-matrix count.
std::vector<ACountEntry> a_count_details(std::size_t n, std::size_t d);
/// True iff every entry's count equals 2^{sum(J)}.
bool a_count_check(std::size_t n, std::size_t d);
/// All index vectors over [n] with d slots.
std::vector<IndexVector> all_index_vectors(std::size_t n, std::size_t d);

ExperimentReport a_count_report(std::size_t max_n, std::size_t max_d);

}  // namespace pareto_smooth
