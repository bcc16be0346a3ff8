#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "condorcet/domain.hpp"

namespace condorcet {

/// How one extension by a new alternative x was built.  The construction
/// appends x to every order, then picks a terminal t that stays terminal,
/// extends the orders ending in t (with t removed) recursively and appends t
/// to the result.  branch_path[i] records the pick at recursion level i:
/// 0 keeps the lower-index terminal, 1 the higher.  Extending an m-element
/// domain takes m-1 picks.
struct ExtensionChoice {
  Alt new_alternative = 0;
  std::vector<std::uint8_t> branch_path;

  friend bool operator==(const ExtensionChoice&, const ExtensionChoice&) = default;
};

/// The extension of a maximal single-peaked domain by a fresh alternative
/// (index m, labelled `label`) along `branch_path`.
Domain extend(const Domain& domain, const std::string& label, std::span<const std::uint8_t> branch_path);

/// All 2^(m-1) extensions with the new alternative terminal, in branch-path
/// order (first pick most significant).
std::vector<Domain> extend_all(const Domain& domain, const std::string& label);

/// The branch path whose extension contains (x, w).
std::vector<std::uint8_t> branch_path_for(const Domain& domain, const LinearOrder& w);

/// The single extension containing the order (x, w).  w must be in the domain.
Domain unique_extension(const Domain& domain, const std::string& label, const LinearOrder& w);

namespace detail {
/// Unchecked core of extend(): orders on 0..k-1 in, orders on 0..k out.
std::vector<LinearOrder> extend_orders(std::span<const LinearOrder> orders, std::size_t k,
                                       std::span<const std::uint8_t> branch_path);
}  // namespace detail

}  // namespace condorcet
