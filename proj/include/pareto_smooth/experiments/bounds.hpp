#pragma once

#include <cstddef>

#include "pareto_smooth/core/fixed_point.hpp"

namespace pareto_smooth {

struct BoundValue {
  double value = 0.0;
  bool overflow = false;  // value is +inf
};

/// 2 (4 phi d)^{d(d+1)/2} n^{2d}: upper bound on E[|PO|].
BoundValue main_theorem_bound(double n, std::size_t d, double phi);
/// Same closed form, reported as the bound on the weighted transcript count.
BoundValue counting_lemma_bound(double n, std::size_t d, double phi);
/// phi d 2^{2n+1} eps: upper bound on Pr[not OK].
double ok_lemma_bound(std::size_t n, std::size_t d, double phi, double epsilon);

}  // namespace pareto_smooth
