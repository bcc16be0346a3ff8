#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>

#include "condorcet/alternatives.hpp"

namespace condorcet {

/// A ranking of m alternatives, most preferred first.  Equivalently the vertex
/// sequence of a directed Hamilton path.  The ranking is always a permutation
/// of 0..m-1.
class LinearOrder {
 public:
  LinearOrder() = default;
  explicit LinearOrder(std::span<const Alt> ranking);
  LinearOrder(std::initializer_list<Alt> ranking);

  static LinearOrder identity(std::size_t m);

  std::size_t size() const noexcept { return size_; }
  Alt operator[](std::size_t i) const noexcept { return ranking_[i]; }
  Alt front() const noexcept { return ranking_[0]; }
  Alt back() const noexcept { return ranking_[size_ - 1]; }
  std::span<const Alt> ranking() const noexcept { return {ranking_.data(), size_}; }
  auto begin() const noexcept { return ranking_.begin(); }
  auto end() const noexcept { return ranking_.begin() + size_; }

  /// 1-based position of `a`.
  std::size_t position(Alt a) const;
  bool prefers(Alt a, Alt b) const { return position(a) < position(b); }

  LinearOrder reversed() const;
  /// (P, x) where x is the next fresh index m.
  LinearOrder appended() const;
  /// (x, P) where x is the next fresh index m.
  LinearOrder prepended() const;
  /// `a` moved to 1-based position k, everything else keeping relative order.
  LinearOrder with_moved(Alt a, std::size_t k) const;
  /// Alternatives of `mask` in this order, renumbered by ascending index.
  LinearOrder restricted(AltMask mask) const;

  friend bool operator==(const LinearOrder&, const LinearOrder&) = default;
  friend auto operator<=>(const LinearOrder&, const LinearOrder&) = default;

 private:
  // size_ first so that the defaulted comparison is (length, lexicographic).
  std::uint8_t size_ = 0;
  std::array<Alt, kMaxAlternatives> ranking_{};
};

std::string to_string(const LinearOrder& order, const AlternativeSet& labels);

}  // namespace condorcet
