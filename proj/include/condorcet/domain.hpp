#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "condorcet/alternatives.hpp"
#include "condorcet/linear_order.hpp"

namespace condorcet {

/// A set of linear orders over a common alternative set.  Orders are kept
/// sorted lexicographically and deduplicated, so two domains holding the same
/// set compare equal member-for-member.
class Domain {
 public:
  Domain() = default;
  Domain(AlternativeSet alternatives, std::vector<LinearOrder> orders);
  /// Uses AlternativeSet::standard for labels.
  explicit Domain(std::vector<LinearOrder> orders);

  const AlternativeSet& alternatives() const noexcept { return alternatives_; }
  std::size_t m() const noexcept { return alternatives_.size(); }
  std::size_t size() const noexcept { return orders_.size(); }
  bool empty() const noexcept { return orders_.empty(); }
  std::span<const LinearOrder> orders() const noexcept { return orders_; }
  auto begin() const noexcept { return orders_.begin(); }
  auto end() const noexcept { return orders_.end(); }

  bool contains(const LinearOrder& order) const;

  /// Same orders, relabelled.
  Domain relabeled(AlternativeSet alternatives) const;

  friend bool operator==(const Domain&, const Domain&) = default;
  /// Lexicographic on the sorted order sequence.
  friend bool operator<(const Domain& a, const Domain& b) { return a.orders_ < b.orders_; }

 private:
  AlternativeSet alternatives_;
  std::vector<LinearOrder> orders_;
};

}  // namespace condorcet
