#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pareto_smooth/core/fixed_point.hpp"

namespace pareto_smooth {

/// A t-box on the epsilon lattice: the cell prod_i [k_i eps, (k_i + 1) eps).
/// Stored as the integer lattice coordinates k, so t = lattice.size().
struct Box {
  std::vector<std::int64_t> lattice;

  std::size_t dim() const { return lattice.size(); }
  Fixed base(std::size_t i, FixedFormat fmt, Epsilon eps) const;
  bool contains(std::span<const Fixed> point, FixedFormat fmt, Epsilon eps) const;

  friend bool operator==(const Box&, const Box&) = default;
};

/// The unique box containing `point`; lattice[i] = floor(point_i / eps).
Box box_of(std::span<const Fixed> point, FixedFormat fmt, Epsilon eps);

/// Three-way comparison of `value` against the lattice point k * eps without
/// overflowing for arbitrary (possibly corrupted) k. Returns <0, 0, >0.
int compare_to_lattice(Fixed value, std::int64_t k, FixedFormat fmt, Epsilon eps);

}  // namespace pareto_smooth
