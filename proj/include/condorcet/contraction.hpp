#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "condorcet/domain.hpp"

namespace condorcet {

/// Restrict every order of `domain` to `subset`, keeping multiplicity and the
/// domain's order sequence.  Sub-orders are renumbered by ascending index.
std::vector<LinearOrder> contract(const Domain& domain, std::span<const Alt> subset);

/// Deduplicated contraction, as a domain on `subset` with inherited labels.
Domain simplify_contraction(const Domain& domain, std::span<const Alt> subset);

/// An order on three alternatives, in original indices, most preferred first.
using TripleOrder = std::array<Alt, 3>;

/// What a domain looks like on one triple.  Each never_* list holds every
/// element of the triple for which that condition holds; a single restricted
/// order satisfies several at once.
struct TripleProfile {
  std::array<Alt, 3> triple{};  // ascending
  std::vector<TripleOrder> restricted_orders;  // sorted
  std::vector<Alt> never_bottom;
  std::vector<Alt> never_top;
  std::vector<Alt> never_middle;

  std::optional<Alt> unique_never_bottom() const;
  std::optional<Alt> unique_never_top() const;
};

TripleProfile classify_triple(const Domain& domain, std::array<Alt, 3> triple);

/// Six-bit record, per 3-subset, of which restricted orders occur.  Bit p of
/// the mask for {i<j<k} stands for the p-th order of (i,j,k) in lexicographic
/// order: ijk, ikj, jik, jki, kij, kji.
class TripleCensus {
 public:
  explicit TripleCensus(const Domain& domain);

  std::size_t m() const noexcept { return m_; }
  /// Pattern mask of the triple; arguments in any order.
  std::uint8_t mask(Alt x, Alt y, Alt z) const;

  /// Position (0, 1, 2 within the sorted triple) of the never-bottom element,
  /// or -1 when none or several qualify.
  int unique_never_bottom_slot(Alt x, Alt y, Alt z) const;

 private:
  std::size_t m_;
  std::vector<std::uint8_t> masks_;  // indexed by i*m*m + j*m + k, i<j<k
};

namespace patterns {
// Orders of (i,j,k), i<j<k, as slots into the sorted triple.
inline constexpr std::array<std::array<int, 3>, 6> kOrders{{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
inline constexpr std::array<std::uint8_t, 3> kForbiddenBottom{0b101000, 0b010010, 0b000101};
inline constexpr std::array<std::uint8_t, 3> kForbiddenTop{0b000011, 0b001100, 0b110000};
inline constexpr std::array<std::uint8_t, 3> kForbiddenMiddle{0b010100, 0b100001, 0b001010};
inline constexpr std::uint8_t kCycleForward = 0b011001;   // ijk, jki, kij
inline constexpr std::uint8_t kCycleBackward = 0b100110;  // ikj, jik, kji

/// Index 0..5 of the restricted order given 0-based positions of i<j<k.
int pattern_of(std::size_t pi, std::size_t pj, std::size_t pk);

inline bool has_cycle(std::uint8_t mask) {
  return (mask & kCycleForward) == kCycleForward || (mask & kCycleBackward) == kCycleBackward;
}
}  // namespace patterns

/// No 3-subset's simplified contraction holds a Condorcet triple.
bool is_condorcet(const Domain& domain);

/// Literal search for orders v1, v2, v3 and alternatives a1, a2, a3 realising
/// the cyclic pattern.  Independent of the contraction route.
bool is_condorcet_bruteforce(const Domain& domain);

}  // namespace condorcet
