#include "condorcet/permutation.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "condorcet/errors.hpp"

namespace condorcet {

Permutation::Permutation(std::vector<Alt> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Alt a : images_) {
    if (a >= images_.size() || seen[a]) throw invalid_argument_error("not a permutation");
    seen[a] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Alt> images(n);
  std::iota(images.begin(), images.end(), Alt{0});
  return Permutation(std::move(images));
}

Permutation Permutation::mapping(const LinearOrder& from, const LinearOrder& to) {
  if (from.size() != to.size()) throw invalid_argument_error("orders differ in length");
  std::vector<Alt> images(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) images[from[i]] = to[i];
  return Permutation(std::move(images));
}

LinearOrder Permutation::operator()(const LinearOrder& order) const {
  if (order.size() != size()) throw invalid_argument_error("permutation and order differ in size");
  std::array<Alt, kMaxAlternatives> r{};
  for (std::size_t i = 0; i < order.size(); ++i) r[i] = images_[order[i]];
  return LinearOrder(std::span<const Alt>(r.data(), order.size()));
}

Domain Permutation::operator()(const Domain& domain) const {
  std::vector<LinearOrder> mapped;
  mapped.reserve(domain.size());
  for (const auto& o : domain) mapped.push_back((*this)(o));
  return Domain(domain.alternatives(), std::move(mapped));
}

Permutation Permutation::inverse() const {
  std::vector<Alt> inv(size());
  for (std::size_t i = 0; i < size(); ++i) inv[images_[i]] = static_cast<Alt>(i);
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw invalid_argument_error("composing permutations of different size");
  std::vector<Alt> images(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) images[i] = a.images_[b.images_[i]];
  return Permutation(std::move(images));
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  for (const auto& c : cycles()) result = std::lcm(result, c.size());
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<std::vector<Alt>> Permutation::cycles() const {
  std::vector<std::vector<Alt>> out;
  std::vector<bool> seen(size(), false);
  for (std::size_t start = 0; start < size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Alt> cycle;
    for (Alt a = static_cast<Alt>(start); !seen[a]; a = images_[a]) {
      seen[a] = true;
      cycle.push_back(a);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::cycle_notation(const AlternativeSet& labels) const {
  const auto cs = cycles();
  if (cs.empty()) return "id";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (Alt a : c) s += labels.label(a);
    s += ')';
  }
  return s;
}

InheritedPermutation inherited_permutation(const LinearOrder& first, const LinearOrder& second) {
  const std::size_t m = first.size();
  if (m < 2 || second.size() != m) throw invalid_argument_error("extremal orders must share length >= 2");
  if (second.front() != first.back() || second.back() != first.front())
    throw invalid_argument_error("second extremal order must run between the same terminals in reverse");
  InheritedPermutation ip;
  ip.theta = Permutation::mapping(first, second);
  ip.start = first.front();
  ip.end = first.back();
  auto images = ip.theta.images();
  images[ip.start] = ip.start;
  images[ip.end] = ip.end;
  ip.sigma = Permutation(std::move(images));
  return ip;
}

Permutation up_to_inverse(const Permutation& sigma) {
  const auto inv = sigma.inverse();
  return inv.cycles() < sigma.cycles() ? inv : sigma;
}

}  // namespace condorcet
