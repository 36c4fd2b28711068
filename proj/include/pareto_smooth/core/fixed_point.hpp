#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pareto_smooth {

inline constexpr int kDefaultFracBits = 30;
inline constexpr int kMaxFracBits = 44;

/// Dyadic fixed-point number `raw / 2^F`. The exponent F is shared by every
/// value of an instance and lives in FixedFormat, so two Fixed values are only
/// comparable when they come from the same format. All arithmetic is exact.
struct Fixed {
  std::int64_t raw = 0;

  friend constexpr auto operator<=>(Fixed, Fixed) = default;
  friend constexpr Fixed operator+(Fixed a, Fixed b) { return {a.raw + b.raw}; }
  friend constexpr Fixed operator-(Fixed a, Fixed b) { return {a.raw - b.raw}; }
  friend constexpr Fixed operator-(Fixed a) { return {-a.raw}; }
  constexpr Fixed& operator+=(Fixed o) {
    raw += o.raw;
    return *this;
  }
  constexpr Fixed& operator-=(Fixed o) {
    raw -= o.raw;
    return *this;
  }
};

struct FixedFormat {
  int frac_bits = kDefaultFracBits;

  constexpr Fixed one() const { return {std::int64_t{1} << frac_bits}; }
  constexpr Fixed from_int(std::int64_t v) const { return {v * one().raw}; }
  double to_double(Fixed v) const;
  /// floor(v * 2^F); the grid cell [k, k+1) * 2^-F maps to k.
  Fixed quantize(double v) const;

  friend constexpr bool operator==(FixedFormat, FixedFormat) = default;
};

/// The dyadic box width epsilon = 2^-exponent.
struct Epsilon {
  int exponent = 10;

  /// Number of fractional bits to drop when mapping a raw value to a lattice
  /// coordinate; requires F >= exponent.
  int shift(FixedFormat fmt) const { return fmt.frac_bits - exponent; }
  Fixed in(FixedFormat fmt) const { return {std::int64_t{1} << shift(fmt)}; }
  double value() const;

  friend constexpr bool operator==(Epsilon, Epsilon) = default;
};

/// Dense row-major d x n matrix of fixed-point entries (the weight matrix W).
class FixedMatrix {
 public:
  FixedMatrix() = default;
  FixedMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Fixed& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Fixed operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Fixed> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<Fixed> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Fixed> data() const { return data_; }

  friend bool operator==(const FixedMatrix&, const FixedMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Fixed> data_;
};

}  // namespace pareto_smooth
