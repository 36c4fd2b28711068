#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pareto_smooth/core/box.hpp"
#include "pareto_smooth/core/solution.hpp"

namespace pareto_smooth {

// Levels are 0-based in code: slot t of an index vector, column t of a
// diagonalization matrix and entry t of a box list all belong to level t + 1,
// so the box in slot t has dimension t + 1.

/// The index vector J: one coordinate of [n] or bottom per level.
class IndexVector {
 public:
  IndexVector() = default;
  explicit IndexVector(std::size_t d) : entries_(d) {}
  explicit IndexVector(std::vector<std::optional<std::size_t>> entries) : entries_(std::move(entries)) {}

  std::size_t d() const { return entries_.size(); }
  const std::optional<std::size_t>& operator[](std::size_t t) const { return entries_[t]; }
  std::optional<std::size_t>& operator[](std::size_t t) { return entries_[t]; }
  std::span<const std::optional<std::size_t>> entries() const { return entries_; }

  /// #{t : J_t != bottom}
  std::size_t count() const;
  /// sum of the (1-based) levels t with J_t != bottom
  std::size_t sum() const;
  /// largest 1-based level with J_t != bottom
  std::optional<std::size_t> max_level() const;

  /// Slot holding coordinate j, if j appears in J.
  std::optional<std::size_t> slot_of(std::size_t j) const;
  bool contains(std::size_t j) const { return slot_of(j).has_value(); }

  /// Entries lie in [0, n) and non-bottom entries are distinct.
  bool valid(std::size_t n) const;

  friend bool operator==(const IndexVector&, const IndexVector&) = default;

 private:
  std::vector<std::optional<std::size_t>> entries_;
};

enum class Trit : std::uint8_t { zero = 0, one = 1, bottom = 2 };

inline Trit trit_of(bool b) { return b ? Trit::one : Trit::zero; }

/// An n x d matrix over {0, 1, bottom} (the diagonalization matrix A).
class DiagMatrix {
 public:
  DiagMatrix() = default;
  DiagMatrix(std::size_t n, std::size_t d, Trit fill = Trit::zero) : n_(n), d_(d), data_(n * d, fill) {}

  std::size_t n() const { return n_; }
  std::size_t d() const { return d_; }
  Trit& operator()(std::size_t j, std::size_t t) { return data_[j * d_ + t]; }
  Trit operator()(std::size_t j, std::size_t t) const { return data_[j * d_ + t]; }
  std::span<const Trit> row(std::size_t j) const { return {data_.data() + j * d_, d_}; }

  friend bool operator==(const DiagMatrix&, const DiagMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t d_ = 0;
  std::vector<Trit> data_;
};

/// Conditions on a single row A^j of a diagonalization matrix, given the
/// bit x^j. `slot` is the position of j in J, or nullopt when j is not in J
/// (the row must then be all zeros).
bool row_diagonalizes(std::span<const Trit> row, std::optional<std::size_t> slot, bool bit, const IndexVector& j);

/// True iff A diagonalizes x on J.
bool diagonalizes(const DiagMatrix& a, const Solution& x, const IndexVector& j);

/// The d x n masking matrix Lambda_J: entry (i, c) is 1 iff c = J_t for some
/// slot t with i <= t.
class MaskMatrix {
 public:
  MaskMatrix(std::size_t d, std::size_t n) : d_(d), n_(n), data_(d * n, 0) {}

  std::size_t rows() const { return d_; }
  std::size_t cols() const { return n_; }
  bool operator()(std::size_t i, std::size_t c) const { return data_[i * n_ + c] != 0; }
  void set(std::size_t i, std::size_t c, bool v) { data_[i * n_ + c] = v ? 1 : 0; }
  std::size_t ones() const;
  MaskMatrix complement() const;

  friend bool operator==(const MaskMatrix&, const MaskMatrix&) = default;

 private:
  std::size_t d_;
  std::size_t n_;
  std::vector<std::uint8_t> data_;
};

MaskMatrix mask_matrix(const IndexVector& j, std::size_t n, std::size_t d);

/// The output (J, A, B) of the transcript algorithm.
struct Transcript {
  IndexVector j;
  DiagMatrix a;
  std::vector<std::optional<Box>> boxes;

  friend bool operator==(const Transcript&, const Transcript&) = default;
};

/// Sum of the levels whose box is present.
std::size_t dim(std::span<const std::optional<Box>> boxes);

}  // namespace pareto_smooth
