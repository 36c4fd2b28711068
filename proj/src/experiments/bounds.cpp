#include "pareto_smooth/experiments/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace pareto_smooth {

BoundValue main_theorem_bound(double n, std::size_t d, double phi) {
  if (!(n >= 1.0) || d == 0 || !(phi > 0.0)) throw std::invalid_argument("bound: need n >= 1, d >= 1, phi > 0");
  const double dd = static_cast<double>(d);
  const double v = 2.0 * std::pow(4.0 * phi * dd, dd * (dd + 1.0) / 2.0) * std::pow(n, 2.0 * dd);
  return {v, std::isinf(v)};
}

BoundValue counting_lemma_bound(double n, std::size_t d, double phi) { return main_theorem_bound(n, d, phi); }

double ok_lemma_bound(std::size_t n, std::size_t d, double phi, double epsilon) {
  if (d == 0 || !(phi > 0.0) || !(epsilon > 0.0)) throw std::invalid_argument("ok_lemma_bound: parameters must be positive");
  return phi * static_cast<double>(d) * std::ldexp(epsilon, static_cast<int>(2 * n + 1));
}

}  // namespace pareto_smooth
