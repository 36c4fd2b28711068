#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "pareto_smooth/core/instance.hpp"

namespace pareto_smooth {

using ObjectivePoint = std::vector<Fixed>;

/// p >= q entrywise.
bool dominates(std::span<const Fixed> p, std::span<const Fixed> q);
/// p >= q on the first t coordinates.
bool t_dominates(std::span<const Fixed> p, std::span<const Fixed> q, std::size_t t);

/// The objective vector (W z, tail(z)) in R^{d+1} of every solution.
std::vector<ObjectivePoint> objective_points(const Instance& inst);

struct ParetoResult {
  /// Indices into Instance::solutions(), ascending.
  std::vector<std::size_t> optima;
  /// objective_points[k] belongs to optima[k].
  std::vector<ObjectivePoint> points;

  friend bool operator==(const ParetoResult&, const ParetoResult&) = default;
};

/// Called after each processed solution with the indices kept so far.
using SweepObserver = std::function<void(std::span<const std::size_t> kept)>;

/// Pareto optima by sweeping solutions in decreasing tail objective and
/// keeping every point not d-dominated by an earlier kept point.
ParetoResult pareto_sweep(const Instance& inst, const SweepObserver& observer = {});

/// Literal all-pairs evaluation of the Pareto definition (test oracle).
ParetoResult brute_force_pareto(const Instance& inst);

}  // namespace pareto_smooth
