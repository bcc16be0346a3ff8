#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = condorcet::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("condorcet_cli_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("enumerate prints the count") {
  CHECK(run({"enumerate", "--m", "3"}).out == "P(3)=1\n");
  CHECK(run({"enumerate", "--m", "5"}).out == "P(5)=8\n");
  const auto path = temp_path("enum5.txt");
  CHECK(run({"enumerate", "--m", "5", "--output", path}).code == 0);
  CHECK(slurp(path).starts_with("m=5 P=8 extremal=sabcf\n"));
  std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == condorcet::cli::kUsage);
  CHECK(run({"enumerate"}).code == condorcet::cli::kUsage);
  CHECK(run({"bogus"}).code == condorcet::cli::kUsage);
  CHECK(run({"classify", "--m", "5", "--format", "xml"}).code == condorcet::cli::kUsage);
  CHECK(run({"check", "/nonexistent/file"}).code == condorcet::cli::kUsage);
  CHECK(run({"enumerate", "--m", "10"}).code == condorcet::cli::kResourceLimit);
  CHECK(run({"classify", "--m", "9"}).code == condorcet::cli::kResourceLimit);
  CHECK(run({"--help"}).code == condorcet::cli::kOk);
}

TEST_CASE("check reports status and sigma for every representative row") {
  const auto r = run({"check", testing::fixture("class_representatives_m5.txt")});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  const std::vector<std::string> sigma{"(ac)", "(abc)", "(bc)", "(ab)", "id", "id"};
  std::string line;
  for (const auto& s : sigma) {
    REQUIRE(std::getline(lines, line));
    CHECK(line.find("condorcet=yes asp=yes maximal=yes") != std::string::npos);
    CHECK(line.find(" sigma=" + s + " ") != std::string::npos);
  }
}

TEST_CASE("check on a partial domain") {
  const auto r = run({"check", testing::fixture("example_m6_twisted.txt")});
  CHECK(r.code == 0);
  CHECK(r.out == "alternatives=6 orders=16 condorcet=yes asp=yes maximal=no\n");
}

TEST_CASE("classify and tables") {
  const auto r = run({"classify", "--m", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("  6        64               8       16       40\n") != std::string::npos);
  CHECK(run({"classify", "--m", "7"}).out.find("note:") != std::string::npos);
  const auto csv = run({"classify", "--m", "5", "--format", "csv"});
  CHECK(csv.out.starts_with("m,sigma,total,self_paired\n"));
  const auto t = run({"tables", "--max-m", "6", "--format", "csv"});
  CHECK(t.out.starts_with("m,P,SP,N\n3,1,1,1\n4,2,2,2\n5,8,4,6\n6,64,16,40\n"));
}

TEST_CASE("output does not depend on the number of jobs") {
  const auto a = run({"classify", "--m", "6", "--jobs", "1"});
  const auto b = run({"classify", "--m", "6", "--jobs", "3"});
  CHECK(a.out == b.out);
  ::setenv("CONDORCET_JOBS", "2", 1);
  CHECK(run({"classify", "--m", "6", "--jobs", "1"}).out == a.out);
  ::setenv("CONDORCET_JOBS", "many", 1);
  CHECK(run({"classify", "--m", "5"}).code == condorcet::cli::kUsage);
  ::unsetenv("CONDORCET_JOBS");
}

TEST_CASE("verify passes") {
  const auto r = run({"verify", "--m", "5", "--bruteforce"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("contract, extend and dip write domains") {
  const auto seed = temp_path("seed.txt");
  {
    std::ofstream f(seed);
    f << "abc\nbac\nacb\ncab\n";
  }
  const auto c = run({"contract", seed, "--subset", "a,c"});
  CHECK(c.code == 0);
  CHECK(c.out == "alternatives: a,c\nac\nca\n");
  CHECK(run({"contract", seed, "--subset", "a,q"}).code == condorcet::cli::kUsage);

  const auto e = run({"extend", seed, "--new", "x"});
  CHECK(e.code == 0);
  CHECK(e.out.find("# extension=3 branch=11") != std::string::npos);
  CHECK(e.out.find("xcab") != std::string::npos);
  CHECK(run({"extend", seed, "--new", "b"}).code == condorcet::cli::kUsage);

  const auto d = run({"dip", seed});
  CHECK(d.out == "alternatives: a,b,c\nbac\nbca\ncab\ncba\n");
  std::filesystem::remove(seed);
}

TEST_CASE("conjecture") {
  const auto r = run({"conjecture", "--max-m", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("m=6: 36 <= N=40 <= 40 : holds") != std::string::npos);
  CHECK(run({"conjecture", "--m", "3"}).code == condorcet::cli::kUsage);
}
