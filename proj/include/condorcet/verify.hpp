#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "condorcet/enumeration.hpp"
#include "condorcet/isomorphism.hpp"

namespace condorcet {

struct InvariantResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::string first_violation;  // empty when none
};

struct VerifyOptions {
  bool bruteforce = false;  // bruteforce maximality on every domain
  /// Domains per level run through the (costly) extension checks; all of them
  /// when the enumeration is no larger.
  std::size_t extension_sample = 64;
  unsigned jobs = 1;
};

/// Structural invariants of a fixed-path enumeration and its classification.
std::vector<InvariantResult> verify_invariants(const EnumerationResult& result,
                                               const ClassificationReport& report,
                                               const VerifyOptions& options = {});

}  // namespace condorcet
