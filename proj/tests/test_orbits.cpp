#include <algorithm>
#include <set>

#include "doctest.h"
#include "mspin/arf_calculus.hpp"
#include "mspin/cli.hpp"
#include "mspin/invariants.hpp"
#include "mspin/orbits.hpp"
#include "oracles.hpp"

using namespace mspin;

namespace {

std::multiset<std::uint64_t> sizes(const CensusReport& r) {
  std::multiset<std::uint64_t> out;
  for (const auto& o : r.orbits) out.insert(o.size);
  return out;
}

}  // namespace

TEST_CASE("orbit examples") {
  CHECK(orbit_of(new_arf(2, {0, 0, 3}, {}, {}, {}, {1, 1, 1})).size() == 1);
  const auto o3 = orbit_of(new_arf(2, {0, 0, 3}, {}, {}, {}, {1, 0, 0}));
  CHECK(o3.size() == 3);
  CHECK(o3.front().punctures == std::vector<Residue>{0, 0, 1});
  CHECK(orbit_of(new_arf(2, {2, 0, 0}, {0, 0}, {0, 0}, {}, {})).size() == 10);
}

TEST_CASE("census examples") {
  const auto g2 = component_census({2, 0, 0}, 2);
  CHECK(sizes(g2) == std::multiset<std::uint64_t>{6, 10});
  CHECK(g2.checks.all());
  const auto p3 = component_census({0, 0, 3}, 2);
  CHECK(sizes(p3) == std::multiset<std::uint64_t>{1, 3});
  for (const auto& o : p3.orbits) {
    if (o.size == 1) CHECK(o.type.n_p == std::vector<int>{0, 3});
    if (o.size == 3) CHECK(o.type.n_p == std::vector<int>{2, 1});
  }
  const auto t = component_census({1, 1, 0}, 3);
  CHECK(t.total == 9);
  REQUIRE(t.orbits.size() == 2);
  for (const auto& o : t.orbits) {
    if (o.type.delta == 3) {
      CHECK(o.size == 1);
      CHECK(o.representative.flatten() == std::vector<Residue>{0, 0, 2});
    } else {
      CHECK(o.type.delta == 1);
      CHECK(o.size == 8);
    }
  }
  const auto empty = component_census({2, 0, 0}, 3);
  CHECK(empty.total == 0);
  CHECK(empty.orbits.empty());
  CHECK(empty.checks.all());
}

TEST_CASE("orbits partition the enumeration with lexicographically least representatives") {
  for (int m : {2, 3, 4})
    for (const auto& sig : default_grid()) {
      const auto report = component_census(sig, m);
      std::set<ArfBasisValues> covered;
      std::uint64_t total = 0;
      for (const auto& o : report.orbits) {
        const auto members = orbit_of(o.representative);
        REQUIRE(members.size() == o.size);
        REQUIRE(members.front() == o.representative);
        for (const auto& v : members) {
          REQUIRE(covered.insert(v).second);
          REQUIRE(type_of(v) == o.type);
        }
        total += o.size;
      }
      CHECK(total == arf_count(sig, Modulus(m)));
      CHECK(std::is_sorted(report.orbits.begin(), report.orbits.end(),
                           [](const auto& a, const auto& b) { return a.representative < b.representative; }));
    }
}

TEST_CASE("classification holds on the default grid") {
  for (int m : {2, 3, 4})
    for (const auto& sig : default_grid()) {
      CAPTURE(sig.to_string());
      CAPTURE(m);
      const auto v = verify_classification(sig, m);
      CHECK(v.ok);
      CHECK(v.diagnostics.empty());
    }
}

TEST_CASE("classification holds on closed genus three and mixed boundaries") {
  CHECK(verify_classification({3, 0, 0}, 2).ok);
  CHECK(verify_classification({2, 1, 2}, 2).ok);
  CHECK(verify_classification({1, 2, 1}, 4).ok);
  CHECK(verify_classification({1, 1, 1}, 6).ok);
}

TEST_CASE("ablation") {
  // With gamma = -1, T3 acts on a single handle like T5b, so dropping it
  // leaves (1,1,0) intact; with a puncture as well the types split.
  CHECK(verify_classification({1, 1, 0}, 4, {10'000'000, {TwistKind::T3}}).ok);
  const auto no_t3 = verify_classification({1, 1, 1}, 4, {10'000'000, {TwistKind::T3}});
  CHECK_FALSE(no_t3.ok);
  CHECK_FALSE(no_t3.diagnostics.empty());
  CHECK_FALSE(verify_classification({1, 1, 0}, 4, {10'000'000, {TwistKind::T1a, TwistKind::T1b}}).ok);
}

TEST_CASE("cap") {
  try {
    component_census({2, 0, 1}, 4, {10, {}});
    FAIL("expected StateSpaceTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StateSpaceTooLarge);
  }
  CHECK_THROWS_AS(orbit_of(new_arf(2, {2, 0, 0}, {0, 0}, {0, 0}, {}, {}), {4, {}}), Error);
}

TEST_CASE("census is reproducible") {
  CHECK(component_census({2, 1, 0}, 4) == component_census({2, 1, 0}, 4));
}
