#include "condorcet/linear_order.hpp"

#include <algorithm>
#include <bit>

#include "condorcet/errors.hpp"

namespace condorcet {

LinearOrder::LinearOrder(std::span<const Alt> ranking) {
  if (ranking.empty()) throw invalid_argument_error("linear order must be nonempty");
  if (ranking.size() > kMaxAlternatives)
    throw resource_limit_error("linear order longer than " + std::to_string(kMaxAlternatives));
  AltMask seen = 0;
  for (Alt a : ranking) {
    if (a >= ranking.size() || (seen >> a & 1u))
      throw invalid_argument_error("ranking is not a permutation of 0..m-1");
    seen |= AltMask{1} << a;
  }
  size_ = static_cast<std::uint8_t>(ranking.size());
  std::copy(ranking.begin(), ranking.end(), ranking_.begin());
}

LinearOrder::LinearOrder(std::initializer_list<Alt> ranking)
    : LinearOrder(std::span<const Alt>(ranking.begin(), ranking.size())) {}

LinearOrder LinearOrder::identity(std::size_t m) {
  std::array<Alt, kMaxAlternatives> r{};
  if (m == 0 || m > kMaxAlternatives) throw invalid_argument_error("bad order length");
  for (std::size_t i = 0; i < m; ++i) r[i] = static_cast<Alt>(i);
  return LinearOrder(std::span<const Alt>(r.data(), m));
}

std::size_t LinearOrder::position(Alt a) const {
  for (std::size_t i = 0; i < size_; ++i)
    if (ranking_[i] == a) return i + 1;
  throw invalid_argument_error("alternative " + std::to_string(a) + " not in order");
}

LinearOrder LinearOrder::reversed() const {
  LinearOrder r = *this;
  std::reverse(r.ranking_.begin(), r.ranking_.begin() + size_);
  return r;
}

LinearOrder LinearOrder::appended() const {
  if (size_ >= kMaxAlternatives) throw resource_limit_error("linear order too long to extend");
  LinearOrder r = *this;
  r.ranking_[size_] = size_;
  ++r.size_;
  return r;
}

LinearOrder LinearOrder::prepended() const {
  if (size_ >= kMaxAlternatives) throw resource_limit_error("linear order too long to extend");
  LinearOrder r;
  r.size_ = static_cast<std::uint8_t>(size_ + 1);
  r.ranking_[0] = size_;
  std::copy(begin(), end(), r.ranking_.begin() + 1);
  return r;
}

LinearOrder LinearOrder::with_moved(Alt a, std::size_t k) const {
  if (k < 1 || k > size_) throw invalid_argument_error("target position out of range");
  const std::size_t from = position(a) - 1;
  LinearOrder r = *this;
  auto first = r.ranking_.begin();
  if (from < k - 1)
    std::rotate(first + from, first + from + 1, first + k);
  else
    std::rotate(first + (k - 1), first + from, first + from + 1);
  return r;
}

LinearOrder LinearOrder::restricted(AltMask mask) const {
  // rank[a] = number of kept alternatives with smaller index than a
  std::array<Alt, kMaxAlternatives> out{};
  std::size_t n = 0;
  for (std::size_t i = 0; i < size_; ++i) {
    const Alt a = ranking_[i];
    if (mask >> a & 1u) out[n++] = static_cast<Alt>(std::popcount(mask & ((AltMask{1} << a) - 1)));
  }
  return LinearOrder(std::span<const Alt>(out.data(), n));
}

std::string to_string(const LinearOrder& order, const AlternativeSet& labels) {
  std::string s;
  for (Alt a : order) s += labels.label(a);
  return s;
}

}  // namespace condorcet
