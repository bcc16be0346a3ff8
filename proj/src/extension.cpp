#include "condorcet/extension.hpp"

#include <array>
#include <bit>

#include "condorcet/asp.hpp"
#include "condorcet/errors.hpp"

namespace condorcet {

namespace {

std::pair<Alt, Alt> two_terminals(std::span<const LinearOrder> orders) {
  AltMask ends = 0;
  for (const auto& o : orders) ends |= AltMask{1} << o.back();
  if (std::popcount(ends) != 2)
    throw invalid_argument_error("domain does not have exactly two terminals");
  const Alt lo = static_cast<Alt>(std::countr_zero(ends));
  const Alt hi = static_cast<Alt>(std::countr_zero(ends & (ends - 1)));
  return {lo, hi};
}

// Orders ending in t, with t dropped and indices above t shifted down.
std::vector<LinearOrder> ending_in(std::span<const LinearOrder> orders, Alt t, std::size_t k) {
  const AltMask keep = ((AltMask{1} << k) - 1) & ~(AltMask{1} << t);
  std::vector<LinearOrder> out;
  for (const auto& o : orders)
    if (o.back() == t) out.push_back(o.restricted(keep));
  return out;
}

void require_extendable(const Domain& domain, const std::string& label) {
  if (domain.alternatives().find(label))
    throw invalid_argument_error("alternative '" + label + "' already present");
  if (domain.m() >= 3 && !is_maximal_asp(domain, MaximalityMode::fast))
    throw invalid_argument_error("only maximal single-peaked domains can be extended");
}

}  // namespace

std::vector<LinearOrder> detail::extend_orders(std::span<const LinearOrder> orders, std::size_t k,
                                               std::span<const std::uint8_t> branch_path) {
  if (branch_path.size() + 1 != k)
    throw invalid_argument_error("branch path length must be m-1");
  if (k == 1) return {LinearOrder{0, 1}, LinearOrder{1, 0}};

  std::vector<LinearOrder> out;
  out.reserve(2 * orders.size());
  for (const auto& o : orders) out.push_back(o.appended());

  const auto [lo, hi] = two_terminals(orders);
  const Alt t = branch_path[0] ? hi : lo;
  const auto sub = ending_in(orders, t, k);
  const auto sub_ext = extend_orders(sub, k - 1, branch_path.subspan(1));

  // Sub-domain index i < k-1 maps back past t; index k-1 is x, which is k here.
  std::array<Alt, kMaxAlternatives> back_map{};
  for (std::size_t i = 0; i + 1 < k; ++i) back_map[i] = static_cast<Alt>(i < t ? i : i + 1);
  back_map[k - 1] = static_cast<Alt>(k);
  std::array<Alt, kMaxAlternatives> r{};
  for (const auto& v : sub_ext) {
    for (std::size_t i = 0; i < k; ++i) r[i] = back_map[v[i]];
    r[k] = t;
    out.emplace_back(std::span<const Alt>(r.data(), k + 1));
  }
  return out;
}

Domain extend(const Domain& domain, const std::string& label, std::span<const std::uint8_t> branch_path) {
  require_extendable(domain, label);
  return Domain(domain.alternatives().with_added(label),
                detail::extend_orders(domain.orders(), domain.m(), branch_path));
}

std::vector<Domain> extend_all(const Domain& domain, const std::string& label) {
  require_extendable(domain, label);
  const std::size_t m = domain.m();
  const auto alternatives = domain.alternatives().with_added(label);
  std::vector<Domain> out;
  std::vector<std::uint8_t> path(m - 1);
  for (std::size_t code = 0; code < (std::size_t{1} << (m - 1)); ++code) {
    for (std::size_t i = 0; i + 1 < m; ++i) path[i] = (code >> (m - 2 - i)) & 1u;
    out.emplace_back(alternatives, detail::extend_orders(domain.orders(), m, path));
  }
  return out;
}

std::vector<std::uint8_t> branch_path_for(const Domain& domain, const LinearOrder& w) {
  if (!domain.contains(w)) throw invalid_argument_error("order is not in the domain");
  std::vector<std::uint8_t> path;
  std::vector<LinearOrder> orders(domain.begin(), domain.end());
  LinearOrder current = w;
  for (std::size_t k = domain.m(); k > 1; --k) {
    const auto [lo, hi] = two_terminals(orders);
    const Alt t = current.back();
    path.push_back(t == hi ? 1 : 0);
    orders = ending_in(orders, t, k);
    current = current.restricted(((AltMask{1} << k) - 1) & ~(AltMask{1} << t));
  }
  return path;
}

Domain unique_extension(const Domain& domain, const std::string& label, const LinearOrder& w) {
  require_extendable(domain, label);
  return extend(domain, label, branch_path_for(domain, w));
}

}  // namespace condorcet
