#include "condorcet/enumeration.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>

#include "condorcet/domain_io.hpp"
#include "condorcet/errors.hpp"

namespace condorcet {

namespace {

struct Node {
  std::vector<LinearOrder> orders;
  std::vector<ExtensionChoice> derivation;
};

unsigned resolve_jobs(unsigned jobs, std::size_t work) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(jobs, work)));
}

// Runs fn(i) for i in [0, n) on `jobs` threads, contiguous slices per thread.
template <typename Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn fn) {
  jobs = resolve_jobs(jobs, n);
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> workers;
  const std::size_t step = (n + jobs - 1) / jobs;
  for (std::size_t begin = 0; begin < n; begin += step)
    workers.emplace_back([=, &fn] {
      for (std::size_t i = begin; i < std::min(n, begin + step); ++i) fn(i);
    });
}

std::vector<Node> next_level(const std::vector<Node>& level, std::size_t k, unsigned jobs) {
  // Extending a k-element domain keeps alternative 0 terminal (first pick 0)
  // and varies the remaining k-2 picks.
  const std::size_t fanout = std::size_t{1} << (k - 2);
  std::vector<Node> out(level.size() * fanout);
  parallel_for(level.size(), jobs, [&](std::size_t p) {
    const Node& parent = level[p];
    for (std::size_t code = 0; code < fanout; ++code) {
      ExtensionChoice choice{static_cast<Alt>(k), std::vector<std::uint8_t>(k - 1, 0)};
      for (std::size_t i = 1; i < k - 1; ++i) choice.branch_path[i] = (code >> (k - 2 - i)) & 1u;
      Node& child = out[p * fanout + code];
      child.orders = detail::extend_orders(parent.orders, k, choice.branch_path);
      child.derivation = parent.derivation;
      child.derivation.push_back(std::move(choice));
    }
  });
  return out;
}

LinearOrder second_extremal_of(const Domain& d) {
  const Alt s = 0, f = static_cast<Alt>(d.m() - 1);
  for (const auto& o : d)
    if (o.front() == f && o.back() == s) return o;
  throw consistency_error("enumerated domain lacks a second extremal order");
}

}  // namespace

std::uint64_t fixed_path_count(std::size_t m) {
  if (m < 2) throw invalid_argument_error("P(m) is defined for m >= 2");
  std::uint64_t p = 1;
  for (std::size_t k = 4; k <= m; ++k) p <<= (k - 3);
  return p;
}

Domain fixed_path_seed() {
  return Domain({LinearOrder{0, 1, 2}, LinearOrder{1, 0, 2}, LinearOrder{1, 2, 0},
                 LinearOrder{2, 1, 0}});
}

namespace {

std::vector<Node> build_levels(std::size_t m, unsigned jobs) {
  const auto seed = fixed_path_seed();
  std::vector<Node> level{Node{{seed.begin(), seed.end()}, {}}};
  for (std::size_t k = 3; k < m; ++k) level = next_level(level, k, jobs);
  return level;
}

}  // namespace

EnumerationResult enumerate_fixed_path(std::size_t m, unsigned jobs) {
  if (m < kMinEnumeration || m > kMaxEnumeration)
    throw resource_limit_error("enumeration supports " + std::to_string(kMinEnumeration) +
                               " <= m <= " + std::to_string(kMaxEnumeration));
  auto level = build_levels(m, jobs);

  EnumerationResult result;
  result.m = m;
  result.common_extremal = LinearOrder::identity(m);
  result.domains.resize(level.size());
  const auto labels = AlternativeSet::standard(m);
  parallel_for(level.size(), jobs, [&](std::size_t i) {
    auto& e = result.domains[i];
    e.domain = Domain(labels, std::move(level[i].orders));
    e.derivation = std::move(level[i].derivation);
    e.second_extremal = second_extremal_of(e.domain);
    e.inherited = inherited_permutation(result.common_extremal, e.second_extremal);
  });
  std::sort(result.domains.begin(), result.domains.end(),
            [](const EnumeratedDomain& a, const EnumeratedDomain& b) { return a.domain < b.domain; });
  for (std::size_t i = 0; i < result.domains.size(); ++i) {
    result.domains[i].id = i;
    if (i > 0 && result.domains[i - 1].domain == result.domains[i].domain)
      throw consistency_error("enumeration produced a duplicate domain");
  }
  return result;
}

std::uint64_t for_each_fixed_path(
    std::size_t m,
    const std::function<void(std::span<const LinearOrder>, std::span<const ExtensionChoice>)>& visit,
    unsigned jobs) {
  if (m < kMinEnumeration || m > kMaxStreamedEnumeration)
    throw resource_limit_error("streamed enumeration supports " + std::to_string(kMinEnumeration) +
                               " <= m <= " + std::to_string(kMaxStreamedEnumeration));
  std::uint64_t visited = 0;
  if (m == kMinEnumeration) {
    const auto seed = fixed_path_seed();
    visit(seed.orders(), {});
    return 1;
  }
  const auto parents = build_levels(m - 1, jobs);
  const std::size_t k = m - 1, fanout = std::size_t{1} << (k - 2);
  std::vector<ExtensionChoice> derivation;
  for (const auto& parent : parents) {
    derivation = parent.derivation;
    derivation.push_back({static_cast<Alt>(k), std::vector<std::uint8_t>(k - 1, 0)});
    auto& path = derivation.back().branch_path;
    for (std::size_t code = 0; code < fanout; ++code) {
      for (std::size_t i = 1; i < k - 1; ++i) path[i] = (code >> (k - 2 - i)) & 1u;
      visit(detail::extend_orders(parent.orders, k, path), derivation);
      ++visited;
    }
  }
  return visited;
}

std::uint64_t write_streamed_enumeration(std::ostream& out, std::size_t m, unsigned jobs) {
  const auto labels = AlternativeSet::standard(m);
  const auto extremal = LinearOrder::identity(m);
  out << "m=" << m << " P=" << fixed_path_count(m) << " extremal=" << to_string(extremal, labels) << '\n';
  std::uint64_t id = 0;
  return for_each_fixed_path(
      m,
      [&](std::span<const LinearOrder> orders, std::span<const ExtensionChoice>) {
        const Domain d(labels, {orders.begin(), orders.end()});
        const auto q = second_extremal_of(d);
        out << "\n# id=" << id++ << " sigma=" << inherited_permutation(extremal, q).sigma.cycle_notation(labels)
            << " Q=" << to_string(q, labels) << '\n';
        write_domain(out, d, false);
      },
      jobs);
}

Domain derive_fixed_path(std::size_t m, std::span<const ExtensionChoice> derivation) {
  if (m < kMinEnumeration || m > kMaxAlternatives) throw invalid_argument_error("bad m");
  if (derivation.size() != m - 3) throw invalid_argument_error("derivation has the wrong number of steps");
  const auto seed = fixed_path_seed();
  std::vector<LinearOrder> orders(seed.begin(), seed.end());
  std::size_t k = 3;
  for (const auto& step : derivation) {
    if (step.new_alternative != k) throw invalid_argument_error("derivation step out of sequence");
    orders = detail::extend_orders(orders, k, step.branch_path);
    ++k;
  }
  return Domain(AlternativeSet::standard(m), std::move(orders));
}

void write_enumeration(std::ostream& out, const EnumerationResult& result) {
  const auto& labels = result.alternatives();
  out << "m=" << result.m << " P=" << result.domains.size()
      << " extremal=" << to_string(result.common_extremal, labels) << '\n';
  for (const auto& e : result.domains) {
    out << "\n# id=" << e.id << " sigma=" << e.inherited.sigma.cycle_notation(labels)
        << " Q=" << to_string(e.second_extremal, labels) << '\n';
    write_domain(out, e.domain, false);
  }
}

std::vector<Domain> read_enumeration(std::istream& in) {
  std::string header;
  if (!std::getline(in, header) || !header.starts_with("m="))
    throw parse_error(1, "expected enumeration header 'm=<m> P=<count> extremal=<order>'");
  std::istringstream fields(header);
  std::string m_field, p_field, extremal_field;
  fields >> m_field >> p_field >> extremal_field;
  if (!p_field.starts_with("P=") || !extremal_field.starts_with("extremal="))
    throw parse_error(1, "malformed enumeration header");
  const std::string extremal = extremal_field.substr(9);
  std::ostringstream rest;
  rest << "alternatives: ";
  for (std::size_t i = 0; i < extremal.size(); ++i) rest << (i ? "," : "") << extremal[i];
  rest << '\n' << in.rdbuf();
  std::istringstream body(rest.str());
  auto domains = read_domains(body);
  if (std::to_string(domains.size()) != p_field.substr(2))
    throw parse_error(1, "header count does not match the number of domains");
  return domains;
}

}  // namespace condorcet
