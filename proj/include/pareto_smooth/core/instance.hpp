#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "pareto_smooth/core/fixed_point.hpp"
#include "pareto_smooth/core/solution.hpp"

namespace pareto_smooth {

/// A multiobjective binary problem: the solution set S, the d x n weight
/// matrix W of the d linear objectives, and the fixed (d+1)-th objective of
/// every solution. The solution list and tail objectives are public data
/// chosen before W; they are shared between copies so that `with_weights`
/// (a redraw of W) is cheap.
///
/// Invariants checked at construction (std::invalid_argument otherwise):
/// distinct solutions of length n, distinct tail objectives, weights in
/// [-1, 1], epsilon exponent <= F <= kMaxFracBits.
class Instance {
 public:
  Instance(std::size_t n, std::size_t d, FixedFormat format, Epsilon epsilon, double phi,
           std::vector<Solution> solutions, FixedMatrix weights, std::vector<Fixed> tail_objectives);

  std::size_t n() const { return shared_->n; }
  std::size_t d() const { return shared_->d; }
  FixedFormat format() const { return shared_->format; }
  Epsilon epsilon() const { return shared_->epsilon; }
  double phi() const { return shared_->phi; }

  std::span<const Solution> solutions() const { return shared_->solutions; }
  const Solution& solution(std::size_t k) const { return shared_->solutions[k]; }
  std::span<const Fixed> tail_objectives() const { return shared_->tails; }
  const FixedMatrix& weights() const { return weights_; }

  /// Same solutions and tail objectives, different weight matrix.
  Instance with_weights(FixedMatrix weights) const;

  /// Position of x in the solution list, or size() if absent.
  std::size_t index_of(const Solution& x) const;

  /// W z for every solution z, as a |S| x d row-major table.
  std::vector<Fixed> linear_objectives() const;

  friend bool operator==(const Instance& a, const Instance& b);

 private:
  struct Shared {
    std::size_t n;
    std::size_t d;
    FixedFormat format;
    Epsilon epsilon;
    double phi;
    std::vector<Solution> solutions;
    std::vector<Fixed> tails;
  };

  Instance(std::shared_ptr<const Shared> shared, FixedMatrix weights);
  static void check_weights(const Shared& s, const FixedMatrix& w);

  std::shared_ptr<const Shared> shared_;
  FixedMatrix weights_;
};

/// Objective table for a fixed solution list under some weight matrix: the
/// value of level i (0-based) of solution z; level d is the tail objective.
class ObjectiveTable {
 public:
  ObjectiveTable(std::span<const Solution> solutions, const FixedMatrix& weights, std::span<const Fixed> tails);

  std::size_t levels() const { return d_ + 1; }
  Fixed operator()(std::size_t z, std::size_t level) const {
    return level == d_ ? tails_[z] : values_[z * d_ + level];
  }

 private:
  std::size_t d_;
  std::vector<Fixed> values_;
  std::span<const Fixed> tails_;
};

}  // namespace pareto_smooth
