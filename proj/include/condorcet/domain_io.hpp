#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "condorcet/domain.hpp"

namespace condorcet {

// Domain text format:
//   # comment lines and blank lines are ignored
//   alternatives: s,a,b,c,f      (optional header, fixes the label order)
//   sabcf                        (one order per line, one character per label)
// Without a header the labels are taken from the first order line, so that
// order becomes (0, 1, ..., m-1).

LinearOrder parse_order(std::string_view text, const AlternativeSet& alternatives);

Domain read_domain(std::istream& in);
Domain parse_domain(std::string_view text);

/// Several domains separated by blank lines.  Every block shares the labels
/// fixed by the first header or first order line.
std::vector<Domain> read_domains(std::istream& in);

void write_domain(std::ostream& out, const Domain& domain, bool with_header = true);
std::string format_domain(const Domain& domain, bool with_header = true);

/// Labels joined with ',' as used in the header line.
std::string join_labels(const AlternativeSet& alternatives);

}  // namespace condorcet
