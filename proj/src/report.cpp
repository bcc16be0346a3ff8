#include "condorcet/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "condorcet/enumeration.hpp"
#include "condorcet/errors.hpp"

namespace condorcet {

std::string format_main_table(std::span<const ClassificationReport> reports) {
  std::ostringstream out;
  out << std::setw(3) << "m" << std::setw(10) << "P(m)" << std::setw(16) << "SP(m)-P(m-1)"
      << std::setw(9) << "SP(m)" << std::setw(9) << "N(m)" << '\n';
  for (const auto& r : reports) {
    const std::uint64_t identity_part = r.m >= 4 ? fixed_path_count(r.m - 1) : r.SP_count;
    out << std::setw(3) << r.m << std::setw(10) << r.P_count << std::setw(16)
        << r.SP_count - identity_part << std::setw(9) << r.SP_count << std::setw(9) << r.N_count << '\n';
  }
  return out.str();
}

std::string format_sigma_table(const ClassificationReport& report) {
  std::ostringstream out;
  std::size_t width = 5;
  for (const auto& t : report.per_sigma) width = std::max(width, t.notation.size());
  width += 2;
  out << "|A|=" << report.m << '\n'
      << std::left << std::setw(static_cast<int>(width)) << "sigma" << std::right << std::setw(9)
      << "domains" << std::setw(13) << "self-paired" << '\n';
  std::uint64_t higher_total = 0, higher_sp = 0;
  for (const auto& t : report.per_sigma) {
    if (t.order > 2) {
      higher_total += t.total;
      higher_sp += t.self_paired;
      continue;
    }
    out << std::left << std::setw(static_cast<int>(width)) << t.notation << std::right << std::setw(9)
        << t.total << std::setw(13) << t.self_paired << '\n';
  }
  out << std::left << std::setw(static_cast<int>(width)) << "Total" << std::right << std::setw(9)
      << report.P_count << std::setw(13) << report.SP_count << '\n';
  if (higher_total > 0)
    out << "(order > 2: " << higher_total << " domains, " << higher_sp << " self-paired)\n";
  return out.str();
}

void write_sigma_csv(std::ostream& out, std::span<const ClassificationReport> reports) {
  out << "m,sigma,total,self_paired\n";
  for (const auto& r : reports)
    for (const auto& t : r.per_sigma) out << r.m << ',' << t.notation << ',' << t.total << ',' << t.self_paired << '\n';
}

void write_main_csv(std::ostream& out, std::span<const ClassificationReport> reports) {
  out << "m,P,SP,N\n";
  for (const auto& r : reports) out << r.m << ',' << r.P_count << ',' << r.SP_count << ',' << r.N_count << '\n';
}

ConjectureVerdict conjecture_bounds(std::size_t m, std::uint64_t n_count) {
  if (m < 4) throw invalid_argument_error("the bound is stated for m >= 4");
  ConjectureVerdict v;
  v.m = m;
  const auto p = fixed_path_count(m), prev = fixed_path_count(m - 1);
  v.twice_lower = p + prev;
  v.twice_upper = p + 2 * prev;
  v.twice_n = 2 * n_count;
  return v;
}

std::string format_conjecture(const ConjectureVerdict& v) {
  const auto half = [](std::uint64_t twice) {
    return std::to_string(twice / 2) + (twice % 2 ? ".5" : "");
  };
  std::ostringstream out;
  out << "m=" << v.m << ": " << half(v.twice_lower) << " <= N=" << half(v.twice_n) << " <= "
      << half(v.twice_upper) << " : " << (v.holds() ? "holds" : "fails");
  return out.str();
}

}  // namespace condorcet
