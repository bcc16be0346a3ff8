#include <doctest.h>

#include <sstream>

#include "condorcet/enumeration.hpp"
#include "condorcet/report.hpp"

using namespace condorcet;

TEST_CASE("tables for m = 5") {
  const std::vector<ClassificationReport> reports{classify(enumerate_fixed_path(5))};
  const auto main = format_main_table(reports);
  CHECK(main.find("  5         8               2        4        6\n") != std::string::npos);
  const auto sigma = format_sigma_table(reports[0]);
  CHECK(sigma.find("(ab)") != std::string::npos);
  CHECK(sigma.find("Total") != std::string::npos);
  std::ostringstream csv;
  write_sigma_csv(csv, reports);
  CHECK(csv.str().starts_with("m,sigma,total,self_paired\n"));
  CHECK(csv.str().find("5,id,2,2\n") != std::string::npos);
  std::ostringstream main_csv;
  write_main_csv(main_csv, reports);
  CHECK(main_csv.str() == "m,P,SP,N\n5,8,4,6\n");
}

TEST_CASE("bounds on the number of classes") {
  CHECK(conjecture_bounds(6, 40).holds());
  CHECK(conjecture_bounds(8, 17024).holds());
  CHECK_FALSE(conjecture_bounds(6, 35).holds());
  CHECK_FALSE(conjecture_bounds(6, 41).holds());
  CHECK(conjecture_bounds(4, 2).twice_lower == 3);
}
