#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pareto_smooth/core/fixed_point.hpp"

namespace pareto_smooth {

/// A point x of {0,1}^n, packed 64 coordinates per word. Coordinate 0 sits in
/// the most significant bit of word 0, so comparing the word sequences
/// compares solutions lexicographically with coordinate 0 most significant.
/// This is the single tie-break order used by every argmax in the library.
class Solution {
 public:
  Solution() = default;
  explicit Solution(std::size_t n);

  /// Coordinates in order, '0'/'1' characters; throws std::invalid_argument.
  static Solution from_string(std::string_view bits);
  /// The k-th vector of {0,1}^n in ascending lexicographic order.
  static Solution from_rank(std::size_t n, std::uint64_t k);

  std::size_t size() const { return n_; }
  bool operator[](std::size_t j) const { return (words_[j / 64] >> (63 - j % 64)) & 1U; }
  void set(std::size_t j, bool value);
  void flip(std::size_t j) { set(j, !(*this)[j]); }
  std::size_t popcount() const;

  /// Least coordinate where the two solutions differ, or size() if equal.
  std::size_t first_difference(const Solution& other) const;

  std::string to_string() const;

  friend bool operator==(const Solution&, const Solution&) = default;
  friend std::strong_ordering operator<=>(const Solution& a, const Solution& b);

  std::span<const std::uint64_t> words() const { return words_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Exact W^i x: sum of the row entries at coordinates where x is 1.
Fixed dot(std::span<const Fixed> row, const Solution& x);

struct SolutionHash {
  std::size_t operator()(const Solution& s) const;
};

}  // namespace pareto_smooth
