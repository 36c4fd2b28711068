#include "pareto_smooth/core/transcript_types.hpp"

#include <stdexcept>

namespace pareto_smooth {

std::size_t IndexVector::count() const {
  std::size_t c = 0;
  for (const auto& e : entries_) c += e.has_value();
  return c;
}

std::size_t IndexVector::sum() const {
  std::size_t s = 0;
  for (std::size_t t = 0; t < entries_.size(); ++t)
    if (entries_[t]) s += t + 1;
  return s;
}

std::optional<std::size_t> IndexVector::max_level() const {
  for (std::size_t t = entries_.size(); t-- > 0;)
    if (entries_[t]) return t + 1;
  return std::nullopt;
}

std::optional<std::size_t> IndexVector::slot_of(std::size_t j) const {
  for (std::size_t t = 0; t < entries_.size(); ++t)
    if (entries_[t] == j) return t;
  return std::nullopt;
}

bool IndexVector::valid(std::size_t n) const {
  for (std::size_t t = 0; t < entries_.size(); ++t) {
    if (!entries_[t]) continue;
    if (*entries_[t] >= n) return false;
    for (std::size_t u = t + 1; u < entries_.size(); ++u)
      if (entries_[u] == entries_[t]) return false;
  }
  return true;
}

bool row_diagonalizes(std::span<const Trit> row, std::optional<std::size_t> slot, bool bit, const IndexVector& j) {
  if (row.size() != j.d()) return false;
  if (!slot) {
    for (Trit v : row)
      if (v != Trit::zero) return false;
    return true;
  }
  const std::size_t u = *slot;
  for (std::size_t t = 0; t < row.size(); ++t) {
    if (!j[t]) {
      if (row[t] != Trit::bottom) return false;
    } else if (row[t] == Trit::bottom) {
      return false;
    } else if (t == u) {
      if (row[t] != trit_of(!bit)) return false;
    } else if (t < u) {
      if (row[t] != trit_of(bit)) return false;
    }
  }
  return true;
}

bool diagonalizes(const DiagMatrix& a, const Solution& x, const IndexVector& j) {
  if (a.n() != x.size() || a.d() != j.d() || !j.valid(x.size())) return false;
  for (std::size_t c = 0; c < a.n(); ++c)
    if (!row_diagonalizes(a.row(c), j.slot_of(c), x[c], j)) return false;
  return true;
}

std::size_t MaskMatrix::ones() const {
  std::size_t c = 0;
  for (auto v : data_) c += v;
  return c;
}

MaskMatrix MaskMatrix::complement() const {
  MaskMatrix out = *this;
  for (auto& v : out.data_) v = v ? 0 : 1;
  return out;
}

MaskMatrix mask_matrix(const IndexVector& j, std::size_t n, std::size_t d) {
  if (j.d() != d || !j.valid(n)) throw std::invalid_argument("mask_matrix: index vector does not fit (n, d)");
  MaskMatrix m(d, n);
  for (std::size_t t = 0; t < d; ++t) {
    if (!j[t]) continue;
    for (std::size_t i = 0; i <= t; ++i) m.set(i, *j[t], true);
  }
  return m;
}

std::size_t dim(std::span<const std::optional<Box>> boxes) {
  std::size_t s = 0;
  for (std::size_t t = 0; t < boxes.size(); ++t)
    if (boxes[t]) s += t + 1;
  return s;
}

}  // namespace pareto_smooth
