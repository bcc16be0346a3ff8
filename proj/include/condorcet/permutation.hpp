#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "condorcet/domain.hpp"

namespace condorcet {

/// A permutation of alternative indices, acting on orders and domains
/// element-wise.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Alt> images);

  static Permutation identity(std::size_t n);
  /// The permutation sending from[i] to to[i] for every position i.
  static Permutation mapping(const LinearOrder& from, const LinearOrder& to);

  std::size_t size() const noexcept { return images_.size(); }
  const std::vector<Alt>& images() const noexcept { return images_; }

  Alt operator()(Alt a) const { return images_.at(a); }
  LinearOrder operator()(const LinearOrder& order) const;
  Domain operator()(const Domain& domain) const;

  Permutation inverse() const;
  /// (a * b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  std::size_t order() const;
  bool is_identity() const;

  /// Nontrivial cycles, each starting at its smallest element, sorted by that
  /// element.
  std::vector<std::vector<Alt>> cycles() const;

  /// "id" or concatenated cycles such as "(ac)(bd)".
  std::string cycle_notation(const AlternativeSet& labels) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Alt> images_;
};

/// theta sends the first extremal order P onto the second one Q position by
/// position, so theta swaps the terminals s = P.front() and f = P.back();
/// sigma is theta with s and f fixed, i.e. theta = (s f) sigma.
struct InheritedPermutation {
  Permutation theta;
  Permutation sigma;
  Alt start = 0;
  Alt end = 0;
};

InheritedPermutation inherited_permutation(const LinearOrder& first, const LinearOrder& second);

/// Representative of {sigma, sigma^-1}: the one whose cycle list compares
/// smaller.
Permutation up_to_inverse(const Permutation& sigma);

}  // namespace condorcet
