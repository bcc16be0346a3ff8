#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "condorcet/domain.hpp"
#include "condorcet/extension.hpp"
#include "condorcet/permutation.hpp"

namespace condorcet {

/// One maximal single-peaked domain containing the common extremal order.
struct EnumeratedDomain {
  std::size_t id = 0;  // rank among all domains of the enumeration
  Domain domain;
  LinearOrder second_extremal;
  InheritedPermutation inherited;
  /// Extension steps from the three-element seed; re-derivable with
  /// derive_fixed_path().
  std::vector<ExtensionChoice> derivation;
};

/// Every maximal single-peaked domain on m alternatives having
/// P = (s, a, b, ..., f) = (0, 1, ..., m-1) as an extremal order, sorted
/// lexicographically by their order sequences.
struct EnumerationResult {
  std::size_t m = 0;
  LinearOrder common_extremal;
  std::vector<EnumeratedDomain> domains;

  const AlternativeSet& alternatives() const { return domains.front().domain.alternatives(); }
};

inline constexpr std::size_t kMinEnumeration = 3;
inline constexpr std::size_t kMaxEnumeration = 8;
// One level further can be streamed: the last level is never held in memory.
inline constexpr std::size_t kMaxStreamedEnumeration = 9;

/// P(m): 1 for m = 2, 3 and 2^(m-3) P(m-1) above.
std::uint64_t fixed_path_count(std::size_t m);

/// The single domain on three alternatives with (0, 1, 2) extremal:
/// {012, 102, 120, 210}.
Domain fixed_path_seed();

/// Builds level m from level m-1 by extending each domain with the new
/// alternative m-1 while keeping alternative 0 terminal, which preserves
/// (0, ..., m-1) as an extremal order.  `jobs` worker threads; 0 means
/// hardware concurrency.  Output does not depend on `jobs`.
EnumerationResult enumerate_fixed_path(std::size_t m, unsigned jobs = 1);

/// Visits the (unsorted) orders of every domain of level m in derivation
/// order (branch codes ascending, parent before child) without materializing
/// the last level, returning the number visited.  Unlike enumerate_fixed_path the visit
/// order is not the canonical domain order.
std::uint64_t for_each_fixed_path(
    std::size_t m,
    const std::function<void(std::span<const LinearOrder>, std::span<const ExtensionChoice>)>& visit,
    unsigned jobs = 1);

/// Streams level m to `out` in the write_enumeration format, ids in visit order.
std::uint64_t write_streamed_enumeration(std::ostream& out, std::size_t m, unsigned jobs = 1);

/// Replays a derivation from the seed.
Domain derive_fixed_path(std::size_t m, std::span<const ExtensionChoice> derivation);

/// Header `m=<m> P=<count> extremal=<labels>`, then one blank-line separated
/// block per domain headed by `# id=<n> sigma=<cycles> Q=<labels>`.
void write_enumeration(std::ostream& out, const EnumerationResult& result);

/// Domains of a file produced by write_enumeration, in file order.
std::vector<Domain> read_enumeration(std::istream& in);

}  // namespace condorcet
