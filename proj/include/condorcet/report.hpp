#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

#include "condorcet/isomorphism.hpp"

namespace condorcet {

/// Rows m | P(m) | SP(m)-P(m-1) | SP(m) | N(m), one per report.
std::string format_main_table(std::span<const ClassificationReport> reports);

/// Self-paired counts per sigma of order <= 2 (identity last) with a total,
/// followed by a summary of the higher-order permutations.
std::string format_sigma_table(const ClassificationReport& report);

/// CSV with header m,sigma,total,self_paired; every tallied sigma.
void write_sigma_csv(std::ostream& out, std::span<const ClassificationReport> reports);

/// CSV with header m,P,SP,N.
void write_main_csv(std::ostream& out, std::span<const ClassificationReport> reports);

/// (P(m) + P(m-1)) / 2 <= N(m) <= (P(m) + 2 P(m-1)) / 2, kept in doubled
/// integers.
struct ConjectureVerdict {
  std::size_t m = 0;
  std::uint64_t twice_lower = 0;
  std::uint64_t twice_n = 0;
  std::uint64_t twice_upper = 0;
  bool holds() const { return twice_lower <= twice_n && twice_n <= twice_upper; }
};

ConjectureVerdict conjecture_bounds(std::size_t m, std::uint64_t n_count);

std::string format_conjecture(const ConjectureVerdict& verdict);

}  // namespace condorcet
