#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "condorcet/domain.hpp"

namespace condorcet {

/// Condorcet, with a never-bottom element on every triple.  Requires m >= 3.
bool is_arrow_single_peaked(const Domain& domain);

/// Condorcet, with a never-top element on every triple.  Requires m >= 3.
bool is_single_dipped(const Domain& domain);

struct TerminalReport {
  std::vector<Alt> terminals;               // ascending
  std::vector<LinearOrder> extremal_orders;  // sorted
};

/// Terminals are the alternatives some order ends with; an extremal order
/// runs from one terminal to another.
TerminalReport terminal_report(const Domain& domain);

enum class MaximalityMode { fast, bruteforce };

/// fast: single-peaked, 2^(m-1) orders, two terminals, two extremal orders.
/// bruteforce: single-peaked and no order outside the domain can be added
/// without breaking single-peakedness.  bruteforce is refused above m = 10.
bool is_maximal_asp(const Domain& domain, MaximalityMode mode = MaximalityMode::fast);

/// Bruteforce maximality for the never-top family.
bool is_maximal_single_dipped(const Domain& domain);

/// All orders single-peaked with respect to `axis`, labelled by `alternatives`
/// (standard labels when omitted).
Domain black_domain(const LinearOrder& axis);
Domain black_domain(const LinearOrder& axis, const AlternativeSet& alternatives);

/// Number of orders with `terminal` at each 1-based position.
std::map<std::size_t, std::size_t> position_census(const Domain& domain, Alt terminal);

/// Moving a terminal later in any order never leaves the domain.
bool check_shuffle_closure(const Domain& domain);

/// For extremal P = (s, a1, a2, ..., f) the domain holds (a2, a1, a3, ..., f, s).
/// Requires m >= 4; at m = 4 the order is (a2, a1, f, s).
bool check_shuffled_extremal(const Domain& domain, const LinearOrder& extremal);
/// Checks every extremal order of the domain.
bool check_shuffled_extremal(const Domain& domain);

/// Orders ending at `terminal`, with it removed: a domain on the remaining
/// alternatives.
Domain terminal_contraction(const Domain& domain, Alt terminal);

/// Orders with the two terminals in the last two places, `last` at the end.
std::vector<LinearOrder> terminal_tail(const Domain& domain, Alt last, Alt second_last);

/// Terminal contractions: each terminal contraction is maximal single-peaked and
/// swapping the two terminals maps one terminal tail onto the other.
bool check_terminal_contractions(const Domain& domain);

/// Reverse every order.
Domain to_single_dipped(const Domain& domain);

}  // namespace condorcet
