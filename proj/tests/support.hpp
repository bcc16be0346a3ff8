#pragma once

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "condorcet/domain_io.hpp"

namespace testing {

// Domain on the given labels (in index order) from order strings.
inline condorcet::Domain domain_of(const std::string& labels, std::initializer_list<std::string> orders) {
  std::string text = "alternatives: ";
  for (std::size_t i = 0; i < labels.size(); ++i) (text += (i ? "," : "")) += labels[i];
  text += '\n';
  for (const auto& o : orders) text += o + '\n';
  return condorcet::parse_domain(text);
}

inline std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

inline std::vector<condorcet::Domain> fixture_domains(const std::string& name) {
  std::ifstream in(fixture(name));
  return condorcet::read_domains(in);
}

// All m! orders of m alternatives in lexicographic order.
inline std::vector<condorcet::LinearOrder> all_orders(std::size_t m) {
  std::vector<condorcet::Alt> r(m);
  for (std::size_t i = 0; i < m; ++i) r[i] = static_cast<condorcet::Alt>(i);
  std::vector<condorcet::LinearOrder> out;
  do out.emplace_back(r); while (std::next_permutation(r.begin(), r.end()));
  return out;
}

}  // namespace testing
