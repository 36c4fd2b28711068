#include "pareto_smooth/core/box.hpp"

#include <limits>
#include <stdexcept>

namespace pareto_smooth {

Fixed Box::base(std::size_t i, FixedFormat fmt, Epsilon eps) const {
  return {lattice.at(i) * eps.in(fmt).raw};
}

bool Box::contains(std::span<const Fixed> point, FixedFormat fmt, Epsilon eps) const {
  if (point.size() != lattice.size()) return false;
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (compare_to_lattice(point[i], lattice[i], fmt, eps) < 0) return false;
    if (lattice[i] == std::numeric_limits<std::int64_t>::max() ||
        compare_to_lattice(point[i], lattice[i] + 1, fmt, eps) >= 0)
      return false;
  }
  return true;
}

Box box_of(std::span<const Fixed> point, FixedFormat fmt, Epsilon eps) {
  if (point.empty()) throw std::invalid_argument("box_of: a box has dimension at least 1");
  Box box;
  box.lattice.reserve(point.size());
  const int shift = eps.shift(fmt);
  // Arithmetic right shift is floor division by 2^shift.
  for (Fixed p : point) box.lattice.push_back(p.raw >> shift);
  return box;
}

int compare_to_lattice(Fixed value, std::int64_t k, FixedFormat fmt, Epsilon eps) {
  const int shift = eps.shift(fmt);
  const std::int64_t hi = std::numeric_limits<std::int64_t>::max() >> shift;
  const std::int64_t lo = std::numeric_limits<std::int64_t>::min() >> shift;
  if (k > hi) return -1;
  if (k < lo) return 1;
  const std::int64_t base = k * (std::int64_t{1} << shift);
  return value.raw < base ? -1 : (value.raw > base ? 1 : 0);
}

}  // namespace pareto_smooth
