#include "condorcet/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "condorcet/asp.hpp"
#include "condorcet/contraction.hpp"
#include "condorcet/extension.hpp"

namespace condorcet {

namespace {

class Ledger {
 public:
  void check(const std::string& name, bool ok, const std::string& where) {
    auto& r = find(name);
    ++r.checked;
    if (!ok && r.violations++ == 0) r.first_violation = where;
  }
  std::vector<InvariantResult> take() { return std::move(results_); }

 private:
  InvariantResult& find(const std::string& name) {
    for (auto& r : results_)
      if (r.name == name) return r;
    results_.push_back({name, 0, 0, {}});
    return results_.back();
  }
  std::vector<InvariantResult> results_;
};

bool census_matches(const Domain& d, Alt terminal) {
  const auto counts = position_census(d, terminal);
  for (std::size_t j = 1; j <= d.m(); ++j) {
    const std::size_t want = j == 1 ? 1 : std::size_t{1} << (j - 2);
    const auto it = counts.find(j);
    if (it == counts.end() || it->second != want) return false;
  }
  return counts.size() == d.m();
}

// extend_all yields 2^(m-1) distinct maximal domains that contract back to
// the input and in which x is terminal; (x, w) picks out exactly one of them.
void check_extensions(const Domain& d, Ledger& ledger, const std::string& where) {
  const std::string label = "x";
  if (d.alternatives().find(label)) return;
  const auto exts = extend_all(d, label);
  const Alt x = static_cast<Alt>(d.m());
  std::vector<Alt> original(d.m());
  for (std::size_t a = 0; a < d.m(); ++a) original[a] = static_cast<Alt>(a);

  std::set<std::vector<LinearOrder>> distinct;
  bool all_good = true;
  for (const auto& e : exts) {
    distinct.emplace(e.begin(), e.end());
    const auto report = terminal_report(e);
    all_good = all_good && is_maximal_asp(e) &&
               std::binary_search(report.terminals.begin(), report.terminals.end(), x) &&
               simplify_contraction(e, original).orders().size() == d.size() &&
               std::equal(d.begin(), d.end(), simplify_contraction(e, original).begin());
  }
  ledger.check("extension count 2^(m-1), distinct, maximal, contracting back",
               all_good && exts.size() == (std::size_t{1} << (d.m() - 1)) && distinct.size() == exts.size(),
               where);

  std::vector<std::size_t> hits(exts.size(), 0);
  bool unique_ok = true;
  for (const auto& w : d) {
    const auto e = unique_extension(d, label, w);
    if (!e.contains(w.prepended())) unique_ok = false;
    std::size_t containing = 0;
    for (std::size_t i = 0; i < exts.size(); ++i)
      if (exts[i].contains(w.prepended())) {
        ++containing;
        ++hits[i];
        if (!(exts[i] == e)) unique_ok = false;
      }
    if (containing != 1) unique_ok = false;
  }
  unique_ok = unique_ok && std::all_of(hits.begin(), hits.end(), [](std::size_t h) { return h == 1; });
  ledger.check("unique extension is a bijection onto the extensions", unique_ok, where);
}

}  // namespace

std::vector<InvariantResult> verify_invariants(const EnumerationResult& result,
                                               const ClassificationReport& report,
                                               const VerifyOptions& options) {
  Ledger ledger;
  const std::size_t m = result.m;
  const auto& labels = result.alternatives();
  const std::size_t n = result.domains.size();
  const std::size_t sample_step =
      options.extension_sample == 0 ? 0 : std::max<std::size_t>(1, n / options.extension_sample);

  ledger.check("P(m) = 2^(m-3) P(m-1)", n == fixed_path_count(m), "m=" + std::to_string(m));
  ledger.check("N = (P + SP) / 2", 2 * report.N_count == report.P_count + report.SP_count,
               "m=" + std::to_string(m));
  ledger.check("N equals the number of class representatives",
               report.N_count == report.representatives.size(), "m=" + std::to_string(m));

  std::map<std::string, std::pair<bool, std::uint64_t>> rejected;  // sigma -> (reject, self-paired)
  for (const auto& e : result.domains) {
    const Domain& d = e.domain;
    const std::string where = "id=" + std::to_string(e.id);
    const auto terminals = terminal_report(d);
    const bool self_paired = report.partner[e.id] == e.id;

    ledger.check("contains the common extremal order",
                 d.contains(result.common_extremal) &&
                     std::find(terminals.extremal_orders.begin(), terminals.extremal_orders.end(),
                               result.common_extremal) != terminals.extremal_orders.end(),
                 where);
    ledger.check("maximal (fast)", is_maximal_asp(d, MaximalityMode::fast), where);
    if (options.bruteforce)
      ledger.check("maximal (bruteforce) agrees with fast",
                   is_maximal_asp(d, MaximalityMode::bruteforce), where);
    ledger.check("Condorcet by triples and by bruteforce", is_condorcet(d) && is_condorcet_bruteforce(d),
                 where);
    ledger.check("2^(m-1) orders, two terminals, two extremal orders",
                 d.size() == (std::size_t{1} << (m - 1)) && terminals.terminals.size() == 2 &&
                     terminals.extremal_orders.size() == 2,
                 where);
    ledger.check("position census 1, 1, 2, 4, ...",
                 terminals.terminals.size() == 2 && census_matches(d, terminals.terminals[0]) &&
                     census_matches(d, terminals.terminals[1]),
                 where);
    ledger.check("terminal contractions", check_terminal_contractions(d), where);
    ledger.check("shuffle closure", check_shuffle_closure(d), where);
    if (m >= 4) ledger.check("second shuffle order present", check_shuffled_extremal(d, result.common_extremal), where);
    ledger.check("derivation replays to the domain", derive_fixed_path(m, e.derivation) == d, where);
    ledger.check("reversal is single-dipped and an involution",
                 is_single_dipped(to_single_dipped(d)) && to_single_dipped(to_single_dipped(d)) == d,
                 where);

    const bool direct = is_self_paired_direct(d, e.inherited.theta);
    ledger.check("self-paired: direct agrees with triple criterion",
                 direct == is_self_paired_triples(d, e.inherited.theta) && direct == self_paired, where);
    if (self_paired) ledger.check("self-paired implies theta of order 2", e.inherited.theta.order() == 2, where);

    const auto& partner = result.domains[report.partner[e.id]];
    ledger.check("theta^-1 maps the domain onto its partner with inverse theta",
                 e.inherited.theta.inverse()(d) == partner.domain &&
                     partner.inherited.theta == e.inherited.theta.inverse(),
                 where);

    auto& r = rejected[e.inherited.sigma.cycle_notation(labels)];
    r.first = rules_out_self_pairing(result.common_extremal, e.inherited.theta);
    if (self_paired) ++r.second;

    if (sample_step != 0 && e.id % sample_step == 0) check_extensions(d, ledger, where);
  }
  for (const auto& [sigma, r] : rejected)
    if (r.first) ledger.check("rejected permutations have no self-paired domain", r.second == 0, sigma);

  if (m >= 4)
    for (const auto& c : closed_form_checks(result, report))
      ledger.check("closed-form count for sigma = " + c.sigma, c.passed(),
                   "expected " + std::to_string(c.expected) + " got " + std::to_string(c.actual) +
                       " (self-paired " + std::to_string(c.self_paired) + ")");
  return ledger.take();
}

}  // namespace condorcet
