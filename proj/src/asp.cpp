#include "condorcet/asp.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "condorcet/contraction.hpp"
#include "condorcet/errors.hpp"

namespace condorcet {

namespace {

void require_triples(const Domain& domain) {
  if (domain.m() < 3) throw invalid_argument_error("need at least 3 alternatives");
}

bool every_triple_has(const TripleCensus& census, const std::array<std::uint8_t, 3>& forbidden) {
  const std::size_t m = census.m();
  for (Alt i = 0; i < m; ++i)
    for (Alt j = i + 1; j < m; ++j)
      for (Alt k = j + 1; k < m; ++k) {
        const auto mask = census.mask(i, j, k);
        if (patterns::has_cycle(mask)) return false;
        if (std::none_of(forbidden.begin(), forbidden.end(),
                         [mask](std::uint8_t f) { return (mask & f) == 0; }))
          return false;
      }
  return true;
}

// Some order outside the domain can join it with every triple still holding
// a never-condition of the given family.
bool has_admissible_addition(const Domain& domain, const std::array<std::uint8_t, 3>& forbidden) {
  const std::size_t m = domain.m();
  const TripleCensus census(domain);
  std::array<Alt, kMaxAlternatives> perm{};
  std::iota(perm.begin(), perm.begin() + m, Alt{0});
  std::array<std::size_t, kMaxAlternatives> pos{};
  do {
    const LinearOrder v(std::span<const Alt>(perm.data(), m));
    if (domain.contains(v)) continue;
    for (std::size_t p = 0; p < m; ++p) pos[perm[p]] = p;
    bool ok = true;
    for (Alt i = 0; ok && i < m; ++i)
      for (Alt j = i + 1; ok && j < m; ++j)
        for (Alt k = j + 1; ok && k < m; ++k) {
          const auto mask = std::uint8_t(census.mask(i, j, k) |
                                         1u << patterns::pattern_of(pos[i], pos[j], pos[k]));
          ok = !patterns::has_cycle(mask) &&
               std::any_of(forbidden.begin(), forbidden.end(),
                           [mask](std::uint8_t f) { return (mask & f) == 0; });
        }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.begin() + m));
  return false;
}

constexpr std::size_t kBruteforceLimit = 10;

LinearOrder swap_in(const LinearOrder& o, Alt x, Alt y) {
  std::array<Alt, kMaxAlternatives> r{};
  for (std::size_t i = 0; i < o.size(); ++i) r[i] = o[i] == x ? y : o[i] == y ? x : o[i];
  return LinearOrder(std::span<const Alt>(r.data(), o.size()));
}

}  // namespace

bool is_arrow_single_peaked(const Domain& domain) {
  require_triples(domain);
  return is_condorcet(domain) && every_triple_has(TripleCensus(domain), patterns::kForbiddenBottom);
}

bool is_single_dipped(const Domain& domain) {
  require_triples(domain);
  return is_condorcet(domain) && every_triple_has(TripleCensus(domain), patterns::kForbiddenTop);
}

TerminalReport terminal_report(const Domain& domain) {
  TerminalReport r;
  AltMask ends = 0;
  for (const auto& o : domain) ends |= AltMask{1} << o.back();
  for (Alt a = 0; a < domain.m(); ++a)
    if (ends >> a & 1u) r.terminals.push_back(a);
  for (const auto& o : domain)
    if (o.front() != o.back() && (ends >> o.front() & 1u)) r.extremal_orders.push_back(o);
  return r;
}

bool is_maximal_asp(const Domain& domain, MaximalityMode mode) {
  require_triples(domain);
  if (mode == MaximalityMode::bruteforce) {
    if (domain.m() > kBruteforceLimit)
      throw resource_limit_error("bruteforce maximality is limited to m <= " +
                                 std::to_string(kBruteforceLimit));
    return is_arrow_single_peaked(domain) &&
           !has_admissible_addition(domain, patterns::kForbiddenBottom);
  }
  if (domain.size() != std::size_t{1} << (domain.m() - 1)) return false;
  if (!is_arrow_single_peaked(domain)) return false;
  const auto report = terminal_report(domain);
  return report.terminals.size() == 2 && report.extremal_orders.size() == 2;
}

bool is_maximal_single_dipped(const Domain& domain) {
  require_triples(domain);
  if (domain.m() > kBruteforceLimit)
    throw resource_limit_error("bruteforce maximality is limited to m <= " +
                               std::to_string(kBruteforceLimit));
  return is_single_dipped(domain) && !has_admissible_addition(domain, patterns::kForbiddenTop);
}

Domain black_domain(const LinearOrder& axis) {
  return black_domain(axis, AlternativeSet::standard(axis.size()));
}

Domain black_domain(const LinearOrder& axis, const AlternativeSet& alternatives) {
  const std::size_t m = axis.size();
  if (m < 3) throw invalid_argument_error("black_domain needs at least 3 alternatives");
  if (alternatives.size() != m) throw invalid_argument_error("axis and labels disagree in size");
  std::array<std::size_t, kMaxAlternatives> where{};
  for (std::size_t p = 0; p < m; ++p) where[axis[p]] = p;

  const auto single_peaked = [&](const LinearOrder& v) {
    const std::size_t peak = where[v.front()];
    for (Alt b = 0; b < m; ++b)
      for (Alt c = 0; c < m; ++c) {
        if (b == c) continue;
        // c lies strictly between b and the peak (or is the peak): c beats b.
        const bool left = where[b] < where[c] && where[c] <= peak;
        const bool right = peak <= where[c] && where[c] < where[b];
        if ((left || right) && !v.prefers(c, b)) return false;
      }
    return true;
  };

  std::vector<LinearOrder> orders;
  std::array<Alt, kMaxAlternatives> perm{};
  std::iota(perm.begin(), perm.begin() + m, Alt{0});
  do {
    LinearOrder v(std::span<const Alt>(perm.data(), m));
    if (single_peaked(v)) orders.push_back(v);
  } while (std::next_permutation(perm.begin(), perm.begin() + m));
  return Domain(alternatives, std::move(orders));
}

std::map<std::size_t, std::size_t> position_census(const Domain& domain, Alt terminal) {
  const auto report = terminal_report(domain);
  if (!std::binary_search(report.terminals.begin(), report.terminals.end(), terminal))
    throw invalid_argument_error("alternative " + std::to_string(terminal) + " is not a terminal");
  std::map<std::size_t, std::size_t> counts;
  for (const auto& o : domain) ++counts[o.position(terminal)];
  return counts;
}

bool check_shuffle_closure(const Domain& domain) {
  const auto report = terminal_report(domain);
  for (const auto& w : domain)
    for (Alt t : report.terminals)
      for (std::size_t k = w.position(t) + 1; k <= domain.m(); ++k)
        if (!domain.contains(w.with_moved(t, k))) return false;
  return true;
}

bool check_shuffled_extremal(const Domain& domain, const LinearOrder& extremal) {
  const std::size_t m = domain.m();
  if (m < 4) throw invalid_argument_error("check_shuffled_extremal needs at least 4 alternatives");
  if (extremal.size() != m) throw invalid_argument_error("extremal order has the wrong length");
  std::vector<Alt> r{extremal[2], extremal[1]};
  for (std::size_t i = 3; i + 1 < m; ++i) r.push_back(extremal[i]);
  r.push_back(extremal[m - 1]);
  r.push_back(extremal[0]);
  return domain.contains(LinearOrder(r));
}

bool check_shuffled_extremal(const Domain& domain) {
  const auto report = terminal_report(domain);
  if (report.extremal_orders.empty()) return false;
  return std::all_of(report.extremal_orders.begin(), report.extremal_orders.end(),
                     [&](const LinearOrder& p) { return check_shuffled_extremal(domain, p); });
}

Domain terminal_contraction(const Domain& domain, Alt terminal) {
  if (terminal >= domain.m()) throw invalid_argument_error("unknown alternative");
  if (domain.m() < 2) throw invalid_argument_error("nothing left after removing the terminal");
  std::vector<LinearOrder> ending;
  for (const auto& o : domain)
    if (o.back() == terminal) ending.push_back(o);
  std::vector<Alt> rest;
  for (Alt a = 0; a < domain.m(); ++a)
    if (a != terminal) rest.push_back(a);
  const Domain sub(domain.alternatives(), std::move(ending));
  return Domain(domain.alternatives().restricted(rest), contract(sub, rest));
}

std::vector<LinearOrder> terminal_tail(const Domain& domain, Alt last, Alt second_last) {
  std::vector<LinearOrder> out;
  const std::size_t m = domain.m();
  for (const auto& o : domain)
    if (m >= 2 && o[m - 1] == last && o[m - 2] == second_last) out.push_back(o);
  return out;
}

bool check_terminal_contractions(const Domain& domain) {
  const auto report = terminal_report(domain);
  if (report.terminals.size() != 2) return false;
  const std::size_t m = domain.m();
  const Alt a1 = report.terminals[0], a2 = report.terminals[1];
  for (Alt t : {a1, a2}) {
    const auto sub = terminal_contraction(domain, t);
    const bool maximal = m - 1 >= 3 ? is_maximal_asp(sub, MaximalityMode::fast)
                                    : sub.size() == (std::size_t{1} << (m - 2));
    if (!maximal) return false;
  }
  auto hat1 = terminal_tail(domain, a1, a2);
  auto hat2 = terminal_tail(domain, a2, a1);
  for (auto& o : hat1) o = swap_in(o, a1, a2);
  std::sort(hat1.begin(), hat1.end());
  return hat1 == hat2;
}

Domain to_single_dipped(const Domain& domain) {
  std::vector<LinearOrder> reversed;
  reversed.reserve(domain.size());
  for (const auto& o : domain) reversed.push_back(o.reversed());
  return Domain(domain.alternatives(), std::move(reversed));
}

}  // namespace condorcet
