#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "condorcet/asp.hpp"
#include "condorcet/contraction.hpp"
#include "condorcet/domain_io.hpp"
#include "condorcet/enumeration.hpp"
#include "condorcet/errors.hpp"
#include "condorcet/extension.hpp"
#include "condorcet/isomorphism.hpp"
#include "condorcet/report.hpp"
#include "condorcet/verify.hpp"

namespace condorcet::cli {

namespace {

struct RunConfig {
  std::size_t m = 0;
  std::size_t max_m = kMaxEnumeration;
  std::string input;
  std::string output;
  std::string subset;
  std::string new_label;
  std::string format = "text";
  bool bruteforce = false;
  unsigned jobs = 0;
};

class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

unsigned effective_jobs(unsigned flag) {
  if (const char* env = std::getenv("CONDORCET_JOBS"); env && *env) {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw invalid_argument_error(std::string("CONDORCET_JOBS is not a number: ") + env);
    }
  }
  return flag;
}

Domain load_domain(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_argument_error("cannot read " + path);
  return read_domain(in);
}

// Writes to the --output file when given, otherwise to `out`.
void emit(const RunConfig& cfg, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (cfg.output.empty()) {
    body(out);
    return;
  }
  std::ofstream file(cfg.output);
  if (!file) throw invalid_argument_error("cannot write " + cfg.output);
  body(file);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  const unsigned jobs = effective_jobs(cfg.jobs);
  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) throw invalid_argument_error("cannot write " + cfg.output);
  }
  std::uint64_t count = 0;
  if (cfg.m == kMaxStreamedEnumeration) {
    // Too large to hold; streamed in derivation order instead of sorted.
    count = file.is_open() ? write_streamed_enumeration(file, cfg.m, jobs)
                           : for_each_fixed_path(cfg.m, [](auto, auto) {}, jobs);
  } else {
    const auto result = enumerate_fixed_path(cfg.m, jobs);
    if (file.is_open()) write_enumeration(file, result);
    count = result.domains.size();
  }
  out << "P(" << cfg.m << ")=" << count << '\n';
  return kOk;
}

void note_for(std::size_t m, std::ostream& out) {
  if (m == 7)
    out << "note: N(7)=560 forces SP(7)=(2*560-1024)=96, matching the per-sigma total of 96;"
           " the value 98 printed in the published main table is inconsistent with both\n";
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const unsigned jobs = effective_jobs(cfg.jobs);
  const auto result = enumerate_fixed_path(cfg.m, jobs);
  const std::vector<ClassificationReport> reports{classify(result, jobs)};
  if (cfg.format == "csv") {
    emit(cfg, out, [&](std::ostream& o) { write_sigma_csv(o, reports); });
    return kOk;
  }
  emit(cfg, out, [&](std::ostream& o) {
    o << format_main_table(reports) << '\n' << format_sigma_table(reports.front());
    note_for(cfg.m, o);
  });
  return kOk;
}

int cmd_tables(const RunConfig& cfg, std::ostream& out) {
  if (cfg.max_m < kMinEnumeration || cfg.max_m > kMaxEnumeration)
    throw resource_limit_error("tables supports --max-m up to " + std::to_string(kMaxEnumeration));
  const unsigned jobs = effective_jobs(cfg.jobs);
  std::vector<ClassificationReport> reports;
  for (std::size_t m = kMinEnumeration; m <= cfg.max_m; ++m)
    reports.push_back(classify(enumerate_fixed_path(m, jobs), jobs));
  emit(cfg, out, [&](std::ostream& o) {
    if (cfg.format == "csv") {
      write_main_csv(o, reports);
      o << '\n';
      write_sigma_csv(o, std::span(reports).subspan(std::min<std::size_t>(2, reports.size())));
      return;
    }
    o << format_main_table(reports);
    for (const auto& r : reports) {
      if (r.m < 5) continue;
      o << '\n' << format_sigma_table(r);
      note_for(r.m, o);
    }
  });
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const unsigned jobs = effective_jobs(cfg.jobs);
  const auto result = enumerate_fixed_path(cfg.m, jobs);
  const auto report = classify(result, jobs);
  VerifyOptions options;
  options.bruteforce = cfg.bruteforce;
  options.jobs = jobs;
  std::size_t failures = 0;
  for (const auto& r : verify_invariants(result, report, options)) {
    out << (r.violations == 0 ? "ok   " : "FAIL ") << r.name << " (" << r.checked << " checked";
    if (r.violations) out << ", " << r.violations << " violations, first at " << r.first_violation;
    out << ")\n";
    failures += r.violations;
  }
  out << (failures == 0 ? "all invariants hold" : "invariant violations found") << " for m=" << cfg.m << '\n';
  return failures == 0 ? kOk : kVerificationFailed;
}

void check_one(const Domain& d, bool bruteforce, std::ostream& out) {
  const auto& labels = d.alternatives();
  out << "alternatives=" << d.m() << " orders=" << d.size() << " condorcet=" << yes_no(is_condorcet(d));
  if (d.m() < 3) {
    out << " asp=n/a\n";
    return;
  }
  const bool maximal = is_maximal_asp(d, bruteforce ? MaximalityMode::bruteforce : MaximalityMode::fast);
  out << " asp=" << yes_no(is_arrow_single_peaked(d)) << " maximal=" << yes_no(maximal);
  const auto terminals = terminal_report(d);
  if (maximal && terminals.extremal_orders.size() == 2) {
    const auto ip = inherited_permutation(d);
    out << " self_paired=" << yes_no(is_self_paired_direct(d, ip.theta))
        << " sigma=" << ip.sigma.cycle_notation(labels)
        << " P=" << to_string(terminals.extremal_orders[0], labels)
        << " Q=" << to_string(terminals.extremal_orders[1], labels);
  }
  out << '\n';
}

// Files with several blank-line separated blocks get one line per block.
int cmd_check(const RunConfig& cfg, std::ostream& out) {
  std::ifstream in(cfg.input);
  if (!in) throw invalid_argument_error("cannot read " + cfg.input);
  const auto domains = read_domains(in);
  if (domains.empty()) throw invalid_argument_error(cfg.input + " holds no orders");
  for (std::size_t i = 0; i < domains.size(); ++i) {
    if (domains.size() > 1) out << "block " << i + 1 << ": ";
    check_one(domains[i], cfg.bruteforce, out);
  }
  return kOk;
}

int cmd_contract(const RunConfig& cfg, std::ostream& out) {
  const Domain d = load_domain(cfg.input);
  std::vector<Alt> subset;
  std::stringstream items(cfg.subset);
  for (std::string item; std::getline(items, item, ',');)
    if (!item.empty()) subset.push_back(d.alternatives().index_of(item));
  const auto contracted = simplify_contraction(d, subset);
  emit(cfg, out, [&](std::ostream& o) { write_domain(o, contracted); });
  return kOk;
}

int cmd_extend(const RunConfig& cfg, std::ostream& out) {
  const Domain d = load_domain(cfg.input);
  const auto extensions = extend_all(d, cfg.new_label);
  emit(cfg, out, [&](std::ostream& o) {
    for (std::size_t i = 0; i < extensions.size(); ++i) {
      std::string bits;
      for (std::size_t b = 0; b + 1 < d.m(); ++b) bits += ((i >> (d.m() - 2 - b)) & 1u) ? '1' : '0';
      o << (i ? "\n" : "") << "# extension=" << i << " branch=" << bits << '\n';
      write_domain(o, extensions[i]);
    }
  });
  return kOk;
}

int cmd_dip(const RunConfig& cfg, std::ostream& out) {
  const Domain d = load_domain(cfg.input);
  emit(cfg, out, [&](std::ostream& o) { write_domain(o, to_single_dipped(d)); });
  return kOk;
}

int cmd_conjecture(const RunConfig& cfg, std::ostream& out) {
  const unsigned jobs = effective_jobs(cfg.jobs);
  const std::size_t lo = cfg.m ? cfg.m : 4, hi = cfg.m ? cfg.m : cfg.max_m;
  if (lo < 4) throw invalid_argument_error("the bound is stated for m >= 4");
  if (hi > kMaxEnumeration) throw resource_limit_error("enumeration supports m <= " + std::to_string(kMaxEnumeration));
  bool all = true;
  for (std::size_t m = lo; m <= hi; ++m) {
    const auto v = conjecture_bounds(m, classify(enumerate_fixed_path(m, jobs), jobs).N_count);
    out << format_conjecture(v) << '\n';
    all = all && v.holds();
  }
  out << "bound " << (all ? "holds" : "fails") << " at every tested m (evidence, not proof)\n";
  return all ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate and classify maximal Arrow's single-peaked Condorcet domains"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto add_m = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--m", cfg.m, "number of alternatives");
    if (required) opt->required();
  };
  const auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", cfg.jobs, "worker threads (0: all cores; CONDORCET_JOBS overrides)");
  };
  const auto add_output = [&](CLI::App* sub) { sub->add_option("-o,--output,--out", cfg.output, "output file"); };
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
  };

  auto* enumerate = app.add_subcommand("enumerate", "all domains sharing the extremal order s,a,b,...,f");
  add_m(enumerate, true);
  add_jobs(enumerate);
  add_output(enumerate);

  auto* classify_cmd = app.add_subcommand("classify", "counts P, SP, N and the per-sigma table for one m");
  add_m(classify_cmd, true);
  add_jobs(classify_cmd);
  add_format(classify_cmd);
  add_output(classify_cmd);

  auto* tables = app.add_subcommand("tables", "main table and per-sigma tables for m = 3..max-m");
  tables->add_option("--max-m", cfg.max_m, "largest m (default 8)");
  add_jobs(tables);
  add_format(tables);
  add_output(tables);

  auto* verify = app.add_subcommand("verify", "run the invariant suite on the enumeration for m");
  add_m(verify, true);
  verify->add_flag("--bruteforce", cfg.bruteforce, "also check maximality by brute force");
  add_jobs(verify);

  auto* check = app.add_subcommand("check", "report Condorcet / single-peaked / maximal / sigma for a domain file");
  check->add_option("file", cfg.input, "domain file")->required();
  check->add_flag("--bruteforce", cfg.bruteforce, "bruteforce maximality");

  auto* contract_cmd = app.add_subcommand("contract", "simplified contraction of a domain file");
  contract_cmd->add_option("file", cfg.input, "domain file")->required();
  contract_cmd->add_option("--subset", cfg.subset, "comma separated labels")->required();
  add_output(contract_cmd);

  auto* extend_cmd = app.add_subcommand("extend", "all extensions of a domain file by a new alternative");
  extend_cmd->add_option("file", cfg.input, "domain file")->required();
  extend_cmd->add_option("--new", cfg.new_label, "label of the new alternative")->required();
  add_output(extend_cmd);

  auto* dip = app.add_subcommand("dip", "reverse every order (single-dipped counterpart)");
  dip->add_option("file", cfg.input, "domain file")->required();
  add_output(dip);

  auto* conjecture = app.add_subcommand("conjecture", "check the bounds on N(m)");
  add_m(conjecture, false);
  conjecture->add_option("--max-m", cfg.max_m, "largest m when --m is absent (default 8)");
  add_jobs(conjecture);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << "run with --help for usage\n";
    return kUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(cfg, out);
    if (*classify_cmd) return cmd_classify(cfg, out);
    if (*tables) return cmd_tables(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*check) return cmd_check(cfg, out);
    if (*contract_cmd) return cmd_contract(cfg, out);
    if (*extend_cmd) return cmd_extend(cfg, out);
    if (*dip) return cmd_dip(cfg, out);
    if (*conjecture) return cmd_conjecture(cfg, out);
  } catch (const resource_limit_error& e) {
    err << "error: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const invalid_argument_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsage;
}

}  // namespace condorcet::cli
