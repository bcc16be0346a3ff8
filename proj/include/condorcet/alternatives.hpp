#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace condorcet {

/// Internal identity of an alternative: its index 0..m-1.
using Alt = std::uint8_t;

/// Subset of alternatives as a bitmask (bit i = alternative i).
using AltMask = std::uint32_t;

inline constexpr std::size_t kMaxAlternatives = 16;

/// The labelled set of alternatives a domain lives on.  Labels are
/// presentation only; every algorithm works on indices.
class AlternativeSet {
 public:
  AlternativeSet() = default;
  explicit AlternativeSet(std::vector<std::string> labels);

  /// s, a, b, c, ..., f: the start terminal, the interior alternatives in
  /// alphabetical order, then the end terminal.  When the interior letters
  /// reach 'f' the end terminal is spelled 'z' instead.
  static AlternativeSet standard(std::size_t m);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(Alt a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<Alt> find(std::string_view label) const;
  Alt index_of(std::string_view label) const;

  /// Alternatives of `subset` (ascending index) renumbered 0..k-1.
  AlternativeSet restricted(std::span<const Alt> subset) const;
  AlternativeSet with_added(std::string label) const;

  friend bool operator==(const AlternativeSet&, const AlternativeSet&) = default;

 private:
  std::vector<std::string> labels_;
};

AltMask mask_of(std::span<const Alt> alts);

}  // namespace condorcet
