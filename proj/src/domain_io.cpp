#include "condorcet/domain_io.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "condorcet/errors.hpp"

namespace condorcet {

namespace {

constexpr std::string_view kHeader = "alternatives:";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

AlternativeSet parse_header(std::string_view rest, std::size_t line) {
  std::vector<std::string> labels;
  std::size_t start = 0;
  while (start <= rest.size()) {
    const auto comma = rest.find(',', start);
    const auto item = trim(rest.substr(start, comma == std::string_view::npos ? rest.npos : comma - start));
    if (item.size() != 1) throw parse_error(line, "labels must be single characters, got '" + std::string(item) + "'");
    labels.emplace_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  try {
    return AlternativeSet(std::move(labels));
  } catch (const std::exception& e) {
    throw parse_error(line, e.what());
  }
}

AlternativeSet labels_from_order(std::string_view order, std::size_t line) {
  std::vector<std::string> labels;
  for (char c : order) labels.emplace_back(1, c);
  try {
    return AlternativeSet(std::move(labels));
  } catch (const std::exception& e) {
    throw parse_error(line, e.what());
  }
}

// Reads blocks; a blank line ends a block once it holds at least one order.
class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  std::optional<Domain> next_block() {
    std::vector<LinearOrder> orders;
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      const auto text = trim(raw);
      if (text.empty()) {
        if (!orders.empty()) break;
        continue;
      }
      if (text.front() == '#') continue;
      if (text.starts_with(kHeader)) {
        auto alts = parse_header(text.substr(kHeader.size()), line_);
        if (alternatives_ && *alternatives_ != alts)
          throw parse_error(line_, "conflicting alternatives header");
        if (!orders.empty()) throw parse_error(line_, "header must precede the orders");
        alternatives_ = std::move(alts);
        continue;
      }
      if (!alternatives_) alternatives_ = labels_from_order(text, line_);
      try {
        orders.push_back(parse_order(text, *alternatives_));
      } catch (const invalid_argument_error& e) {
        throw parse_error(line_, e.what());
      }
    }
    if (orders.empty()) return std::nullopt;
    return Domain(*alternatives_, std::move(orders));
  }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
  std::optional<AlternativeSet> alternatives_;
};

}  // namespace

LinearOrder parse_order(std::string_view text, const AlternativeSet& alternatives) {
  if (text.size() != alternatives.size())
    throw invalid_argument_error("order '" + std::string(text) + "' has " +
                                 std::to_string(text.size()) + " labels, expected " +
                                 std::to_string(alternatives.size()));
  std::vector<Alt> ranking;
  ranking.reserve(text.size());
  for (char c : text) ranking.push_back(alternatives.index_of(std::string_view(&c, 1)));
  try {
    return LinearOrder(ranking);
  } catch (const invalid_argument_error&) {
    throw invalid_argument_error("order '" + std::string(text) + "' repeats a label");
  }
}

Domain read_domain(std::istream& in) {
  Reader reader(in);
  std::vector<Domain> blocks;
  auto first = reader.next_block();
  if (!first) throw parse_error(0, "no orders found");
  // A single-domain file may contain blank lines between orders.
  std::vector<LinearOrder> orders(first->begin(), first->end());
  while (auto more = reader.next_block()) orders.insert(orders.end(), more->begin(), more->end());
  return Domain(first->alternatives(), std::move(orders));
}

Domain parse_domain(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_domain(in);
}

std::vector<Domain> read_domains(std::istream& in) {
  Reader reader(in);
  std::vector<Domain> out;
  while (auto d = reader.next_block()) out.push_back(std::move(*d));
  return out;
}

std::string join_labels(const AlternativeSet& alternatives) {
  std::string s;
  for (const auto& l : alternatives.labels()) {
    if (!s.empty()) s += ',';
    s += l;
  }
  return s;
}

void write_domain(std::ostream& out, const Domain& domain, bool with_header) {
  if (with_header) out << kHeader << ' ' << join_labels(domain.alternatives()) << '\n';
  for (const auto& o : domain) out << to_string(o, domain.alternatives()) << '\n';
}

std::string format_domain(const Domain& domain, bool with_header) {
  std::ostringstream out;
  write_domain(out, domain, with_header);
  return out.str();
}

}  // namespace condorcet
