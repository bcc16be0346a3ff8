// Acceptance driver: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "condorcet/asp.hpp"
#include "condorcet/contraction.hpp"
#include "condorcet/enumeration.hpp"
#include "condorcet/isomorphism.hpp"
#include "condorcet/report.hpp"
#include "condorcet/verify.hpp"
#include "support.hpp"

using namespace condorcet;

namespace {

struct Level {
  EnumerationResult result;
  ClassificationReport report;
};

std::map<std::size_t, Level>& levels() {
  static std::map<std::size_t, Level> cache;
  return cache;
}

const Level& level(std::size_t m) {
  auto& cache = levels();
  auto it = cache.find(m);
  if (it == cache.end()) {
    auto result = enumerate_fixed_path(m);
    auto report = classify(result);
    it = cache.emplace(m, Level{std::move(result), std::move(report)}).first;
  }
  return it->second;
}

// Collects failure details; a criterion passes when none were recorded.
class Findings {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 8) failures_.push_back(what);
    failed_ += !ok;
  }
  bool ok() const { return failed_ == 0; }
  std::size_t checks() const { return checks_; }
  std::string summary() const {
    std::string s;
    for (const auto& f : failures_) s += "\n      " + f;
    return s;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

std::string str(std::uint64_t v) { return std::to_string(v); }

// 1. Main table.
void counts(Findings& f) {
  const std::map<std::size_t, std::array<std::uint64_t, 3>> published{
      {3, {1, 1, 1}}, {4, {2, 2, 2}}, {5, {8, 4, 6}}, {6, {64, 16, 40}}, {7, {1024, 0, 560}}, {8, {32768, 1280, 17024}}};
  for (const auto& [m, row] : published) {
    const auto& r = level(m).report;
    const std::string at = "m=" + str(m) + ": ";
    f.expect(r.P_count == row[0], at + "P=" + str(r.P_count));
    f.expect(r.N_count == row[2], at + "N=" + str(r.N_count));
    if (m == 7)
      f.expect(2 * r.N_count == r.P_count + r.SP_count && r.SP_count == 96, at + "SP=" + str(r.SP_count));
    else
      f.expect(r.SP_count == row[1], at + "SP=" + str(r.SP_count));
  }
}

// 2. Per-sigma self-paired counts against the published rows.
void sigma_tables(Findings& f) {
  std::ifstream in(testing::fixture("published_sigma_tables.csv"));
  std::string line;
  std::getline(in, line);
  std::map<std::size_t, std::set<std::string>> listed;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream fields(line);
    std::string m_text, sigma, count_text;
    std::getline(fields, m_text, ',');
    std::getline(fields, sigma, ',');
    std::getline(fields, count_text, ',');
    const std::size_t m = std::stoul(m_text);
    const std::uint64_t expected = std::stoull(count_text);
    const auto& r = level(m).report;
    const std::string at = "m=" + m_text + " " + sigma + ": ";
    if (sigma == "Total") {
      f.expect(r.SP_count == expected, at + str(r.SP_count) + " != " + count_text);
      continue;
    }
    listed[m].insert(sigma);
    const auto it = std::find_if(r.per_sigma.begin(), r.per_sigma.end(),
                                 [&](const SigmaTally& t) { return t.notation == sigma; });
    f.expect(it != r.per_sigma.end(), at + "not tallied");
    if (it != r.per_sigma.end())
      f.expect(it->self_paired == expected, at + str(it->self_paired) + " != " + count_text);
  }
  // Rows the tables leave out must have no self-paired domain.
  for (const auto& [m, names] : listed)
    for (const auto& t : level(m).report.per_sigma)
      if (!names.contains(t.notation))
        f.expect(t.self_paired == 0, "m=" + str(m) + " unlisted " + t.notation + " has " + str(t.self_paired));
  f.expect(listed.size() == 4, "tables for m=5..8 expected");
}

std::vector<LinearOrder> ending_in(const Domain& d, Alt last) {
  std::vector<LinearOrder> out;
  for (const auto& o : d)
    if (o.back() == last) out.push_back(o);
  return out;
}

// 3. The six-alternative example: one extremal pair, two non-isomorphic domains.
void worked_example(Findings& f) {
  const auto& result = level(6).result;
  const auto& labels = result.alternatives();
  const Permutation swap_sf({5, 1, 2, 3, 4, 0});
  const std::vector<Alt> interior{1, 2, 3, 4};
  std::vector<std::size_t> paper_reading;
  for (const auto& [name, q_spec, q_contracted] :
       {std::tuple{"twisted", "fdbcas", "dbca"}, std::tuple{"reversed", "fdcbas", "dcba"}}) {
    const auto table = testing::fixture_domains(std::string("example_m6_") + name + ".txt");
    if (table.size() != 1) {
      f.expect(false, std::string(name) + " fixture unreadable");
      continue;
    }
    const auto rows = table[0].relabeled(labels);
    const std::vector<LinearOrder> half(rows.begin(), rows.end());
    std::vector<const EnumeratedDomain*> matches;
    for (const auto& e : result.domains)
      if (ending_in(e.domain, 5) == half) matches.push_back(&e);
    f.expect(!matches.empty(), std::string(name) + ": no enumerated domain has these 16 orders");

    // Same extremal pair for both cases: Q = (f, a, b, c, d, s).
    const EnumeratedDomain* same_pair = nullptr;
    const EnumeratedDomain* own_pair = nullptr;
    for (const auto* e : matches) {
      const auto q = to_string(e->second_extremal, labels);
      if (q == "fabcds") same_pair = e;
      if (q == q_spec) own_pair = e;
      f.expect(e->domain.size() == 32, std::string(name) + ": size " + str(e->domain.size()));
    }
    f.expect(same_pair != nullptr, std::string(name) + ": no domain with extremal pair sabcdf, fabcds");
    f.expect(own_pair != nullptr, std::string(name) + ": no domain with Q=" + q_spec);
    if (same_pair) {
      paper_reading.push_back(same_pair->id);
      // The orders ending in s are the same table with s and f exchanged.
      std::vector<LinearOrder> full = half;
      for (const auto& o : half) full.push_back(swap_sf(o));
      f.expect(Domain(labels, full) == same_pair->domain, std::string(name) + ": orders ending in s differ");
      const auto ends = terminal_report(simplify_contraction(same_pair->domain, interior)).extremal_orders;
      std::set<std::string> got;
      for (const auto& o : ends) got.insert(to_string(o, labels.restricted(interior)));
      f.expect(got == std::set<std::string>{"abcd", q_contracted},
               std::string(name) + ": contraction on {a,b,c,d} has the wrong extremal orders");
    }
  }
  if (paper_reading.size() == 2) {
    const auto& r = level(6).report;
    f.expect(paper_reading[0] != paper_reading[1], "twisted and reversed cases coincide");
    f.expect(r.partner[paper_reading[0]] != paper_reading[1], "twisted and reversed cases are isomorphic");
  }
}

// 4. The published five-alternative class representatives.
void appendix(Findings& f) {
  std::ifstream in(testing::fixture("class_representatives_m5.txt"));
  std::vector<std::string> sigma;
  for (std::string line; std::getline(in, line);)
    if (const auto at = line.find(" sigma="); line.starts_with("# row=") && at != std::string::npos)
      sigma.push_back(line.substr(at + 7, line.find(' ', at + 7) - at - 7));
  const auto rows = testing::fixture_domains("class_representatives_m5.txt");
  f.expect(rows.size() == 6 && sigma.size() == 6, "six rows expected");
  const auto& [result, report] = level(5);
  std::set<std::size_t> classes;
  for (std::size_t i = 0; i < std::min(rows.size(), sigma.size()); ++i) {
    const auto& d = rows[i];
    const std::string at = "row " + str(i + 1) + ": ";
    f.expect(is_condorcet(d) && is_condorcet_bruteforce(d), at + "not Condorcet");
    f.expect(is_arrow_single_peaked(d), at + "not single-peaked");
    f.expect(is_maximal_asp(d) && is_maximal_asp(d, MaximalityMode::bruteforce), at + "not maximal");
    const auto got = inherited_permutation(d).sigma.cycle_notation(d.alternatives());
    f.expect(got == sigma[i], at + "sigma " + got + " != " + sigma[i]);
    const auto relabeled = d.relabeled(result.alternatives());
    const auto it = std::find_if(result.domains.begin(), result.domains.end(),
                                 [&](const EnumeratedDomain& e) { return e.domain == relabeled; });
    f.expect(it != result.domains.end(), at + "not in the enumeration");
    if (it != result.domains.end()) classes.insert(std::min(it->id, report.partner[it->id]));
  }
  f.expect(report.N_count == 6 && report.representatives.size() == 6, "expected 6 classes at m=5");
  const std::set<std::size_t> reps(report.representatives.begin(), report.representatives.end());
  f.expect(classes == reps, "rows do not cover each class once");

  std::vector<std::size_t> ab;
  for (const auto& e : result.domains)
    if (to_string(e.second_extremal, result.alternatives()) == "fbacs") ab.push_back(e.id);
  f.expect(ab.size() == 2, "extremal pair sabcf, fbacs has " + str(ab.size()) + " domains");
  if (ab.size() == 2) {
    const auto& d0 = result.domains[ab[0]];
    const auto& d1 = result.domains[ab[1]];
    f.expect(d0.domain != d1.domain, "(ab) domains are equal");
    f.expect(report.partner[ab[0]] == ab[1] && report.partner[ab[1]] == ab[0], "(ab) domains not paired");
    f.expect(d0.inherited.theta.inverse()(d0.domain) == d1.domain, "(ab) domains not mapped onto each other");
  }
}

// 5. Invariant suites: exhaustive up to m=6, sampled extensions at m=7.
void properties(Findings& f) {
  for (std::size_t m = 3; m <= 7; ++m) {
    VerifyOptions options;
    options.bruteforce = m <= 6;
    options.extension_sample = m <= 6 ? 1u << 20 : 64;
    for (const auto& r : verify_invariants(level(m).result, level(m).report, options))
      f.expect(r.violations == 0, "m=" + str(m) + " " + r.name + ": " + r.first_violation);
  }
}

// 6. Fast tests against brute force, on enumerated domains and perturbations.
void oracles(Findings& f) {
  for (std::size_t m = 3; m <= 6; ++m)
    for (const auto& e : level(m).result.domains) {
      f.expect(is_condorcet(e.domain) == is_condorcet_bruteforce(e.domain), "condorcet m=" + str(m));
      f.expect(is_maximal_asp(e.domain) == is_maximal_asp(e.domain, MaximalityMode::bruteforce),
               "maximality m=" + str(m));
    }
  std::mt19937 rng(2024);
  std::size_t perturbed = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 4 + trial % 3;
    const auto& domains = level(m).result.domains;
    const auto& base = domains[rng() % domains.size()].domain;
    std::vector<LinearOrder> orders(base.begin(), base.end());
    const std::size_t victim = rng() % orders.size();
    if (trial % 2 == 0) {
      orders.erase(orders.begin() + static_cast<long>(victim));
    } else {
      // Swap two adjacent alternatives in one order.
      std::vector<Alt> r(orders[victim].begin(), orders[victim].end());
      const std::size_t i = rng() % (m - 1);
      std::swap(r[i], r[i + 1]);
      orders[victim] = LinearOrder(r);
    }
    const Domain d(base.alternatives(), orders);
    if (d == base) continue;
    ++perturbed;
    const std::string at = "perturbation " + str(trial) + ": ";
    f.expect(is_condorcet(d) == is_condorcet_bruteforce(d), at + "condorcet disagrees");
    f.expect(is_maximal_asp(d) == is_maximal_asp(d, MaximalityMode::bruteforce), at + "maximality disagrees");
    f.expect(!is_maximal_asp(d), at + "still maximal");
  }
  f.expect(perturbed >= 100, "only " + str(perturbed) + " perturbations");
}

// 7. Reversal to single-dipped domains preserves the class count.
void single_dipped(Findings& f) {
  for (std::size_t m = 3; m <= 6; ++m) {
    const auto& [result, report] = level(m);
    std::vector<Domain> dipped;
    std::vector<std::vector<LinearOrder>> extremals;
    for (const auto& e : result.domains) {
      const auto r = to_single_dipped(e.domain);
      f.expect(to_single_dipped(r) == e.domain, "reversal is not an involution");
      f.expect(is_single_dipped(r), "m=" + str(m) + " reversed domain lacks never-top");
      for (Alt i = 0; i < m; ++i)
        for (Alt j = i + 1; j < m; ++j)
          for (Alt k = j + 1; k < m; ++k)
            f.expect(!classify_triple(r, {i, j, k}).never_top.empty(), "triple without never-top");
      // The dipped domain's own extremal pair: first-placed elements at both ends.
      std::set<Alt> tops;
      for (const auto& o : r) tops.insert(o.front());
      std::vector<LinearOrder> extremal;
      for (const auto& o : r)
        if (o.front() != o.back() && tops.contains(o.front()) && tops.contains(o.back())) extremal.push_back(o);
      f.expect(tops.size() == 2 && extremal.size() == 2, "dipped domain lacks two extremal orders");
      dipped.push_back(r);
      extremals.push_back(extremal);
    }
    // θ runs from the extremal order every dipped domain shares to the other one.
    std::vector<LinearOrder> common = extremals.front();
    for (const auto& pair : extremals)
      std::erase_if(common, [&](const LinearOrder& o) { return std::find(pair.begin(), pair.end(), o) == pair.end(); });
    // A lone domain (m=3) shares both.
    f.expect(!common.empty(), "m=" + str(m) + ": dipped domains share no extremal order");
    std::vector<Permutation> thetas;
    if (!common.empty())
      for (const auto& pair : extremals)
        if (pair.size() == 2) thetas.push_back(Permutation::mapping(common[0], pair[0] == common[0] ? pair[1] : pair[0]));
    if (thetas.size() == dipped.size()) {
      const auto classes = count_isomorphism_classes(dipped, thetas);
      f.expect(classes == report.N_count, "m=" + str(m) + ": " + str(classes) + " classes, N=" + str(report.N_count));
    }
  }
}

// 8. Bounds on N(m); evidence only.
void bounds(Findings& f, std::string& detail) {
  for (std::size_t m = 4; m <= 8; ++m) {
    const auto v = conjecture_bounds(m, level(m).report.N_count);
    f.expect(v.holds(), format_conjecture(v));
    detail += "\n      " + format_conjecture(v);
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Findings&, std::string&)> run;
  };
  const std::vector<Criterion> criteria{
      {"counting table P, SP, N for m=3..8", [](Findings& f, std::string&) { counts(f); }},
      {"per-sigma self-paired tables for m=5..8", [](Findings& f, std::string&) { sigma_tables(f); }},
      {"six-alternative twisted and reversed example", [](Findings& f, std::string&) { worked_example(f); }},
      {"five-alternative class representatives", [](Findings& f, std::string&) { appendix(f); }},
      {"invariant suites (exhaustive m<=6, sampled m=7)", [](Findings& f, std::string&) { properties(f); }},
      {"fast and brute-force oracles agree", [](Findings& f, std::string&) { oracles(f); }},
      {"single-dipped reversal preserves classes", [](Findings& f, std::string&) { single_dipped(f); }},
      {"bounds on N(m) for m=4..8", bounds},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Findings f;
    std::string detail;
    try {
      criteria[i].run(f, detail);
    } catch (const std::exception& e) {
      f.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (f.ok() ? "PASS" : "FAIL") << ' ' << i + 1 << ". " << criteria[i].name << " (" << f.checks()
              << " checks)" << (f.ok() ? detail : f.summary()) << std::endl;
    failed += !f.ok();
  }
  return failed == 0 ? 0 : 1;
}
