#include <doctest.h>

#include <set>

#include "condorcet/asp.hpp"
#include "condorcet/enumeration.hpp"
#include "condorcet/errors.hpp"
#include "support.hpp"

using namespace condorcet;

TEST_CASE("fixed-path counts") {
  CHECK(fixed_path_count(2) == 1);
  CHECK(fixed_path_count(3) == 1);
  CHECK(fixed_path_count(5) == 8);
  CHECK(fixed_path_count(8) == 32768);
  CHECK(fixed_path_count(9) == 2097152);
}

TEST_CASE("enumeration at small m") {
  for (std::size_t m = 3; m <= 7; ++m) {
    const auto result = enumerate_fixed_path(m);
    CHECK(result.domains.size() == fixed_path_count(m));
    CHECK(result.common_extremal == LinearOrder::identity(m));
    for (std::size_t i = 0; i < result.domains.size(); ++i) {
      const auto& e = result.domains[i];
      CHECK(e.id == i);
      CHECK(e.domain.size() == std::size_t{1} << (m - 1));
      CHECK(e.domain.contains(result.common_extremal));
      CHECK(e.domain.contains(e.second_extremal));
      CHECK(e.second_extremal.front() == m - 1);
      CHECK(e.second_extremal.back() == 0);
      if (i > 0) CHECK(result.domains[i - 1].domain < e.domain);
    }
  }
}

TEST_CASE("every enumerated domain is maximal and replays from its derivation") {
  for (const auto& e : enumerate_fixed_path(6).domains) {
    CHECK(is_maximal_asp(e.domain));
    CHECK(derive_fixed_path(6, e.derivation) == e.domain);
  }
}

TEST_CASE("enumeration does not depend on the number of jobs") {
  const auto one = enumerate_fixed_path(6, 1);
  const auto three = enumerate_fixed_path(6, 3);
  REQUIRE(one.domains.size() == three.domains.size());
  for (std::size_t i = 0; i < one.domains.size(); ++i) CHECK(one.domains[i].domain == three.domains[i].domain);
}

TEST_CASE("streamed enumeration visits the same domains") {
  const auto result = enumerate_fixed_path(6);
  std::set<Domain> seen;
  const auto labels = AlternativeSet::standard(6);
  const auto n = for_each_fixed_path(6, [&](std::span<const LinearOrder> orders, std::span<const ExtensionChoice> d) {
    CHECK(d.size() == 3);
    seen.insert(Domain(labels, {orders.begin(), orders.end()}));
  });
  CHECK(n == 64);
  std::set<Domain> expected;
  for (const auto& e : result.domains) expected.insert(e.domain);
  CHECK(seen == expected);
}

TEST_CASE("enumeration bounds") {
  CHECK_THROWS_AS(enumerate_fixed_path(2), resource_limit_error);
  CHECK_THROWS_AS(enumerate_fixed_path(kMaxEnumeration + 1), resource_limit_error);
  CHECK_THROWS_AS(for_each_fixed_path(kMaxStreamedEnumeration + 1, [](auto, auto) {}), resource_limit_error);
}
