#include "condorcet/alternatives.hpp"

#include <algorithm>
#include <unordered_set>

#include "condorcet/errors.hpp"

namespace condorcet {

AlternativeSet::AlternativeSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw invalid_argument_error("alternative set must be nonempty");
  if (labels_.size() > kMaxAlternatives)
    throw resource_limit_error("at most " + std::to_string(kMaxAlternatives) +
                               " alternatives are supported");
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw invalid_argument_error("empty alternative label");
    if (!seen.insert(l).second) throw invalid_argument_error("duplicate alternative label '" + l + "'");
  }
}

AlternativeSet AlternativeSet::standard(std::size_t m) {
  if (m == 0) throw invalid_argument_error("alternative set must be nonempty");
  if (m > kMaxAlternatives)
    throw resource_limit_error("at most " + std::to_string(kMaxAlternatives) +
                               " alternatives are supported");
  std::vector<std::string> labels{"s"};
  if (m == 1) return AlternativeSet(std::move(labels));
  const std::size_t interior = m - 2;
  for (std::size_t i = 0; i < interior; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  labels.emplace_back(interior >= 6 ? "z" : "f");
  return AlternativeSet(std::move(labels));
}

std::optional<Alt> AlternativeSet::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Alt>(it - labels_.begin());
}

Alt AlternativeSet::index_of(std::string_view label) const {
  if (auto a = find(label)) return *a;
  throw invalid_argument_error("unknown alternative '" + std::string(label) + "'");
}

AlternativeSet AlternativeSet::restricted(std::span<const Alt> subset) const {
  std::vector<Alt> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::string> labels;
  labels.reserve(sorted.size());
  for (Alt a : sorted) labels.push_back(label(a));
  return AlternativeSet(std::move(labels));
}

AlternativeSet AlternativeSet::with_added(std::string label) const {
  auto labels = labels_;
  labels.push_back(std::move(label));
  return AlternativeSet(std::move(labels));
}

AltMask mask_of(std::span<const Alt> alts) {
  AltMask mask = 0;
  for (Alt a : alts) mask |= AltMask{1} << a;
  return mask;
}

}  // namespace condorcet
