#include "pareto_smooth/core/solution.hpp"

#include <bit>
#include <stdexcept>

namespace pareto_smooth {

Solution::Solution(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

Solution Solution::from_string(std::string_view bits) {
  Solution s(bits.size());
  for (std::size_t j = 0; j < bits.size(); ++j) {
    if (bits[j] == '1') {
      s.set(j, true);
    } else if (bits[j] != '0') {
      throw std::invalid_argument("solution bitstring may only contain '0' and '1': \"" + std::string(bits) +
                                  "\"");
    }
  }
  return s;
}

Solution Solution::from_rank(std::size_t n, std::uint64_t k) {
  if (n < 64 && (k >> n) != 0) throw std::out_of_range("rank exceeds 2^n");
  Solution s(n);
  for (std::size_t j = 0; j < n && j < 64; ++j) s.set(n - 1 - j, (k >> j) & 1U);
  return s;
}

void Solution::set(std::size_t j, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (63 - j % 64);
  if (value)
    words_[j / 64] |= mask;
  else
    words_[j / 64] &= ~mask;
}

std::size_t Solution::popcount() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t Solution::first_difference(const Solution& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const std::uint64_t diff = words_[w] ^ other.words_[w];
    if (diff != 0) return w * 64 + static_cast<std::size_t>(std::countl_zero(diff));
  }
  return n_;
}

std::string Solution::to_string() const {
  std::string out(n_, '0');
  for (std::size_t j = 0; j < n_; ++j)
    if ((*this)[j]) out[j] = '1';
  return out;
}

std::strong_ordering operator<=>(const Solution& a, const Solution& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  for (std::size_t w = 0; w < a.words_.size(); ++w)
    if (a.words_[w] != b.words_[w]) return a.words_[w] <=> b.words_[w];
  return std::strong_ordering::equal;
}

Fixed dot(std::span<const Fixed> row, const Solution& x) {
  if (row.size() != x.size()) throw std::invalid_argument("dot: row length does not match solution length");
  std::int64_t acc = 0;
  const auto words = x.words();
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t bits = words[w];
    while (bits != 0) {
      const int lead = std::countl_zero(bits);
      acc += row[w * 64 + static_cast<std::size_t>(lead)].raw;
      bits &= ~(std::uint64_t{1} << (63 - lead));
    }
  }
  return {acc};
}

std::size_t SolutionHash::operator()(const Solution& s) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ s.size();
  for (auto w : s.words()) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace pareto_smooth
