#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "condorcet/domain.hpp"
#include "condorcet/enumeration.hpp"
#include "condorcet/permutation.hpp"

namespace condorcet {

/// Inherited permutation of a domain with exactly two extremal orders.  The
/// lexicographically smaller extremal order is taken as the first one unless
/// `first` is given.
InheritedPermutation inherited_permutation(const Domain& domain);
InheritedPermutation inherited_permutation(const Domain& domain, const LinearOrder& first);

/// theta maps the domain onto itself.
bool is_self_paired_direct(const Domain& domain);
bool is_self_paired_direct(const Domain& domain, const Permutation& theta);

/// Never-bottom elements are carried along by theta: whenever a is the
/// never-bottom element of triple T, theta(a) is that of theta(T).  Triples
/// theta fixes pointwise are skipped.
bool is_self_paired_triples(const Domain& domain);
bool is_self_paired_triples(const Domain& domain, const Permutation& theta);

/// True when some x, x' = theta(x) != x and a fixed point a of theta appear in
/// P in the order x, x', a.  No domain with extremal pair (P, theta(P)) is then
/// self-paired.
bool rules_out_self_pairing(const LinearOrder& first, const Permutation& theta);

struct SigmaTally {
  Permutation sigma;  // representative of {sigma, sigma^-1}
  std::string notation;
  std::size_t order = 1;
  std::uint64_t total = 0;
  std::uint64_t self_paired = 0;
};

struct ClassificationReport {
  std::size_t m = 0;
  std::uint64_t P_count = 0;
  std::uint64_t SP_count = 0;
  std::uint64_t N_count = 0;
  /// Every sigma of order <= 2, plus every other sigma that occurs.
  /// Involutions by cycle count, then higher orders, identity last.
  std::vector<SigmaTally> per_sigma;
  /// Ids of the class representatives: the smaller of each pair.
  std::vector<std::size_t> representatives;
  /// partner[i]: id of theta_i^-1(D_i); equals i for self-paired domains.
  std::vector<std::size_t> partner;
};

/// Pairs each domain D with theta_D^-1(D), which has the same common extremal
/// order, and counts classes as |self-paired| + |paired| / 2.  Throws
/// consistency_error if a partner is missing or the pairing is not an
/// involution.
ClassificationReport classify(const EnumerationResult& result, unsigned jobs = 1);

/// Number of classes {D, theta_D^-1(D)} among `domains`, each partner required
/// to be present.
std::size_t count_isomorphism_classes(std::span<const Domain> domains,
                                      std::span<const Permutation> thetas);

struct ClosedFormCheck {
  std::size_t m = 0;
  std::string sigma;
  std::uint64_t expected = 0;
  std::uint64_t actual = 0;
  std::uint64_t self_paired = 0;
  bool passed() const { return actual == expected && self_paired == actual; }
};

/// Count of domains with sigma = id against P(m-1) and, for m >= 5, with
/// sigma = (a1 a_{m-2}) and (a2 a_{m-2}) against P(m-3); all must be
/// self-paired.
std::vector<ClosedFormCheck> closed_form_checks(const EnumerationResult& result,
                                                const ClassificationReport& report);
/// Runs the enumeration for every m in 4..max_m (max_m <= 8).
std::vector<ClosedFormCheck> closed_form_checks(std::size_t max_m, unsigned jobs = 1);

/// All involutions (including the identity) of the interior alternatives
/// 1..m-2 of an m-element set.
std::vector<Permutation> interior_involutions(std::size_t m);

}  // namespace condorcet
