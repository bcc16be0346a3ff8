#include "condorcet/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <thread>
#include <tuple>

#include "condorcet/asp.hpp"
#include "condorcet/contraction.hpp"
#include "condorcet/errors.hpp"

namespace condorcet {

namespace {

template <typename Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn fn) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(n, 1)));
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

auto display_key(const Permutation& sigma) {
  const auto cycles = sigma.cycles();
  const std::size_t order = sigma.order();
  return std::make_tuple(cycles.empty(), order > 2, cycles.size(), cycles);
}

Permutation transposition(std::size_t n, Alt x, Alt y) {
  auto images = Permutation::identity(n).images();
  std::swap(images[x], images[y]);
  return Permutation(std::move(images));
}

void collect_involutions(std::vector<Alt>& images, std::vector<Alt>& free_points,
                         std::vector<Permutation>& out) {
  if (free_points.empty()) {
    out.emplace_back(images);
    return;
  }
  const Alt first = free_points.front();
  std::vector<Alt> rest(free_points.begin() + 1, free_points.end());
  collect_involutions(images, rest, out);  // first stays fixed
  for (std::size_t i = 0; i < rest.size(); ++i) {
    const Alt partner = rest[i];
    std::vector<Alt> remaining;
    for (std::size_t j = 0; j < rest.size(); ++j)
      if (j != i) remaining.push_back(rest[j]);
    images[first] = partner;
    images[partner] = first;
    collect_involutions(images, remaining, out);
    images[first] = first;
    images[partner] = partner;
  }
}

}  // namespace

InheritedPermutation inherited_permutation(const Domain& domain) {
  const auto report = terminal_report(domain);
  if (report.extremal_orders.size() != 2)
    throw invalid_argument_error("domain does not have exactly two extremal orders");
  return inherited_permutation(report.extremal_orders[0], report.extremal_orders[1]);
}

InheritedPermutation inherited_permutation(const Domain& domain, const LinearOrder& first) {
  const auto report = terminal_report(domain);
  if (report.extremal_orders.size() != 2)
    throw invalid_argument_error("domain does not have exactly two extremal orders");
  const auto& e = report.extremal_orders;
  if (first == e[0]) return inherited_permutation(e[0], e[1]);
  if (first == e[1]) return inherited_permutation(e[1], e[0]);
  throw invalid_argument_error("given order is not extremal in the domain");
}

bool is_self_paired_direct(const Domain& domain) {
  return is_self_paired_direct(domain, inherited_permutation(domain).theta);
}

bool is_self_paired_direct(const Domain& domain, const Permutation& theta) {
  return theta(domain) == domain;
}

bool is_self_paired_triples(const Domain& domain) {
  return is_self_paired_triples(domain, inherited_permutation(domain).theta);
}

bool is_self_paired_triples(const Domain& domain, const Permutation& theta) {
  const std::size_t m = domain.m();
  if (theta.size() != m) throw invalid_argument_error("permutation size does not match domain");
  const TripleCensus census(domain);
  for (Alt i = 0; i < m; ++i)
    for (Alt j = i + 1; j < m; ++j)
      for (Alt k = j + 1; k < m; ++k) {
        if (theta(i) == i && theta(j) == j && theta(k) == k) continue;
        const std::array<Alt, 3> t{i, j, k};
        const int slot = census.unique_never_bottom_slot(i, j, k);
        if (slot < 0) return false;
        std::array<Alt, 3> image{theta(i), theta(j), theta(k)};
        std::sort(image.begin(), image.end());
        const int image_slot = census.unique_never_bottom_slot(image[0], image[1], image[2]);
        if (image_slot < 0 || theta(t[slot]) != image[image_slot]) return false;
      }
  return true;
}

bool rules_out_self_pairing(const LinearOrder& first, const Permutation& theta) {
  if (theta.size() != first.size()) throw invalid_argument_error("permutation size does not match order");
  for (Alt x = 0; x < first.size(); ++x) {
    const Alt moved = theta(x);
    if (moved == x || first.position(moved) < first.position(x)) continue;
    for (Alt a = 0; a < first.size(); ++a)
      if (theta(a) == a && first.position(a) > first.position(moved)) return true;
  }
  return false;
}

ClassificationReport classify(const EnumerationResult& result, unsigned jobs) {
  const auto& ds = result.domains;
  const std::size_t n = ds.size();
  for (std::size_t i = 0; i < n; ++i)
    if (ds[i].id != i || (i > 0 && !(ds[i - 1].domain < ds[i].domain)))
      throw consistency_error("enumeration is not canonically sorted");

  ClassificationReport report;
  report.m = result.m;
  report.P_count = n;
  report.partner.assign(n, n);
  parallel_for(n, jobs, [&](std::size_t i) {
    const Domain image = ds[i].inherited.theta.inverse()(ds[i].domain);
    const auto it = std::lower_bound(ds.begin(), ds.end(), image,
                                     [](const EnumeratedDomain& e, const Domain& d) { return e.domain < d; });
    if (it != ds.end() && it->domain == image) report.partner[i] = it->id;
  });
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = report.partner[i];
    if (j == n)
      throw consistency_error("partner of domain " + std::to_string(i) + " is missing from the enumeration");
    if (report.partner[j] != i)
      throw consistency_error("pairing is not an involution at domain " + std::to_string(i));
  }

  std::map<Permutation, SigmaTally> tallies;
  const auto& labels = result.alternatives();
  const auto touch = [&](const Permutation& sigma) -> SigmaTally& {
    auto key = up_to_inverse(sigma);
    auto [it, inserted] = tallies.try_emplace(key);
    if (inserted) {
      it->second.sigma = key;
      it->second.notation = key.cycle_notation(labels);
      it->second.order = key.order();
    }
    return it->second;
  };
  for (const auto& inv : interior_involutions(result.m)) touch(inv);

  std::uint64_t paired = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto& tally = touch(ds[i].inherited.sigma);
    ++tally.total;
    if (report.partner[i] == i) {
      ++tally.self_paired;
      ++report.SP_count;
    } else {
      ++paired;
    }
    if (report.partner[i] >= i) report.representatives.push_back(i);
  }
  report.N_count = report.SP_count + paired / 2;
  for (auto& [key, tally] : tallies) report.per_sigma.push_back(std::move(tally));
  std::sort(report.per_sigma.begin(), report.per_sigma.end(),
            [](const SigmaTally& a, const SigmaTally& b) { return display_key(a.sigma) < display_key(b.sigma); });
  return report;
}

std::size_t count_isomorphism_classes(std::span<const Domain> domains,
                                      std::span<const Permutation> thetas) {
  if (domains.size() != thetas.size()) throw invalid_argument_error("one permutation per domain required");
  std::vector<std::size_t> idx(domains.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return domains[a] < domains[b]; });
  std::size_t classes = 0;
  for (std::size_t r = 0; r < idx.size(); ++r) {
    const std::size_t i = idx[r];
    const Domain image = thetas[i].inverse()(domains[i]);
    const auto it = std::lower_bound(idx.begin(), idx.end(), image,
                                     [&](std::size_t k, const Domain& d) { return domains[k] < d; });
    if (it == idx.end() || !(domains[*it] == image))
      throw consistency_error("partner of a domain is missing");
    if (static_cast<std::size_t>(it - idx.begin()) >= r) ++classes;
  }
  return classes;
}

std::vector<ClosedFormCheck> closed_form_checks(const EnumerationResult& result,
                                                const ClassificationReport& report) {
  const std::size_t m = result.m;
  if (m < 4) throw invalid_argument_error("closed forms start at m = 4");
  std::vector<std::pair<Permutation, std::uint64_t>> targets{
      {Permutation::identity(m), fixed_path_count(m - 1)}};
  if (m >= 5) {
    targets.emplace_back(transposition(m, 1, static_cast<Alt>(m - 2)), fixed_path_count(m - 3));
    targets.emplace_back(transposition(m, 2, static_cast<Alt>(m - 2)), fixed_path_count(m - 3));
  }
  std::vector<ClosedFormCheck> out;
  for (const auto& [sigma, expected] : targets) {
    ClosedFormCheck c;
    c.m = m;
    c.sigma = sigma.cycle_notation(result.alternatives());
    c.expected = expected;
    for (const auto& e : result.domains) {
      if (e.inherited.sigma != sigma) continue;
      ++c.actual;
      if (report.partner[e.id] == e.id) ++c.self_paired;
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ClosedFormCheck> closed_form_checks(std::size_t max_m, unsigned jobs) {
  if (max_m < 4 || max_m > kMaxEnumeration)
    throw invalid_argument_error("closed_form_checks needs 4 <= max_m <= " + std::to_string(kMaxEnumeration));
  std::vector<ClosedFormCheck> out;
  for (std::size_t m = 4; m <= max_m; ++m) {
    const auto result = enumerate_fixed_path(m, jobs);
    const auto checks = closed_form_checks(result, classify(result, jobs));
    out.insert(out.end(), checks.begin(), checks.end());
  }
  return out;
}

std::vector<Permutation> interior_involutions(std::size_t m) {
  if (m < 2) throw invalid_argument_error("need at least two alternatives");
  auto images = Permutation::identity(m).images();
  std::vector<Alt> interior;
  for (std::size_t a = 1; a + 1 < m; ++a) interior.push_back(static_cast<Alt>(a));
  std::vector<Permutation> out;
  collect_involutions(images, interior, out);
  return out;
}

}  // namespace condorcet
