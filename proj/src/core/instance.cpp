#include "pareto_smooth/core/instance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pareto_smooth {

Instance::Instance(std::size_t n, std::size_t d, FixedFormat format, Epsilon epsilon, double phi,
                   std::vector<Solution> solutions, FixedMatrix weights, std::vector<Fixed> tail_objectives) {
  if (d == 0) throw std::invalid_argument("instance: d must be at least 1");
  if (format.frac_bits < 0 || format.frac_bits > kMaxFracBits)
    throw std::invalid_argument("instance: F must lie in [0, " + std::to_string(kMaxFracBits) + "]");
  if (epsilon.exponent < 0 || epsilon.exponent > format.frac_bits)
    throw std::invalid_argument("instance: epsilon exponent must lie in [0, F]");
  if (!(phi > 0.0) || !std::isfinite(phi)) throw std::invalid_argument("instance: phi must be positive");
  // |W x| <= n + d must stay far from the int64 range.
  if (std::ldexp(static_cast<double>(n + d), format.frac_bits) > std::ldexp(1.0, 61))
    throw std::invalid_argument("instance: n + d too large for F fractional bits");
  if (tail_objectives.size() != solutions.size())
    throw std::invalid_argument("instance: one tail objective per solution required");
  for (std::size_t k = 0; k < solutions.size(); ++k)
    if (solutions[k].size() != n)
      throw std::invalid_argument("instance: solution " + std::to_string(k) + " has length " +
                                  std::to_string(solutions[k].size()) + ", expected " + std::to_string(n));

  std::vector<std::size_t> order(solutions.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return solutions[a] < solutions[b]; });
  for (std::size_t k = 1; k < order.size(); ++k)
    if (solutions[order[k]] == solutions[order[k - 1]])
      throw std::invalid_argument("instance: duplicate solution " + solutions[order[k]].to_string());

  std::vector<Fixed> sorted_tails = tail_objectives;
  std::sort(sorted_tails.begin(), sorted_tails.end());
  if (std::adjacent_find(sorted_tails.begin(), sorted_tails.end()) != sorted_tails.end())
    throw std::invalid_argument("instance: tail objectives must be distinct");

  auto shared = std::make_shared<Shared>(
      Shared{n, d, format, epsilon, phi, std::move(solutions), std::move(tail_objectives)});
  check_weights(*shared, weights);
  shared_ = std::move(shared);
  weights_ = std::move(weights);
}

Instance::Instance(std::shared_ptr<const Shared> shared, FixedMatrix weights)
    : shared_(std::move(shared)), weights_(std::move(weights)) {
  check_weights(*shared_, weights_);
}

void Instance::check_weights(const Shared& s, const FixedMatrix& w) {
  if (w.rows() != s.d || w.cols() != s.n)
    throw std::invalid_argument("instance: weight matrix must be d x n (" + std::to_string(s.d) + " x " +
                                std::to_string(s.n) + ")");
  const std::int64_t one = s.format.one().raw;
  for (std::size_t i = 0; i < w.rows(); ++i)
    for (std::size_t j = 0; j < w.cols(); ++j)
      if (w(i, j).raw > one || w(i, j).raw < -one)
        throw std::invalid_argument("instance: weight (" + std::to_string(i) + ", " + std::to_string(j) +
                                    ") lies outside [-1, 1]");
}

Instance Instance::with_weights(FixedMatrix weights) const { return Instance(shared_, std::move(weights)); }

std::size_t Instance::index_of(const Solution& x) const {
  const auto& sols = shared_->solutions;
  return static_cast<std::size_t>(std::find(sols.begin(), sols.end(), x) - sols.begin());
}

std::vector<Fixed> Instance::linear_objectives() const {
  const auto& sols = shared_->solutions;
  std::vector<Fixed> out(sols.size() * d());
  for (std::size_t z = 0; z < sols.size(); ++z)
    for (std::size_t i = 0; i < d(); ++i) out[z * d() + i] = dot(weights_.row(i), sols[z]);
  return out;
}

bool operator==(const Instance& a, const Instance& b) {
  const auto& x = *a.shared_;
  const auto& y = *b.shared_;
  return x.n == y.n && x.d == y.d && x.format == y.format && x.epsilon == y.epsilon && x.phi == y.phi &&
         x.solutions == y.solutions && x.tails == y.tails && a.weights_ == b.weights_;
}

ObjectiveTable::ObjectiveTable(std::span<const Solution> solutions, const FixedMatrix& weights,
                               std::span<const Fixed> tails)
    : d_(weights.rows()), values_(solutions.size() * weights.rows()), tails_(tails) {
  for (std::size_t z = 0; z < solutions.size(); ++z)
    for (std::size_t i = 0; i < d_; ++i) values_[z * d_ + i] = dot(weights.row(i), solutions[z]);
}

}  // namespace pareto_smooth
