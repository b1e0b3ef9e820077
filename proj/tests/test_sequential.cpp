#include <cmath>
#include <functional>

#include "doctest.h"
#include "mspin/level_lemmas.hpp"
#include "mspin/lifting.hpp"
#include "mspin/sequential.hpp"

using namespace mspin;
using doctest::Approx;

namespace {

std::vector<MoebiusElement> fg1_triple(double alpha) {
  const auto c1 = make_hyperbolic(kInfinity, 0, 4), c2 = make_hyperbolic(alpha, 1, 4);
  return {c1, c2, inverse(c1 * c2)};
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("FG1 examples") {
  CHECK(is_sequential_set(fg1_triple(0.8), {0, 3, 0}));
  CHECK_FALSE(is_sequential_set(fg1_triple(0.8), {0, 2, 1}));
  CHECK(is_sequential_set(fg1_triple(0.64), {0, 2, 1}));
  CHECK(element_info(fg1_triple(0.64)[2], ElementClass::Parabolic).cls == ElementClass::Parabolic);
  CHECK_FALSE(is_sequential_set(fg1_triple(0.5), {0, 3, 0}));
  CHECK_FALSE(is_sequential_set(fg1_triple(0.5), {0, 2, 1}));
  auto broken = fg1_triple(0.8);
  broken[2] = make_hyperbolic(2, 3, 4);
  CHECK_FALSE(is_sequential_set(broken, {0, 3, 0}));
  CHECK(code_of([] { is_sequential_set(fg1_triple(0.8), {0, 4, 0}); }) == ErrorCode::LengthMismatch);
}

TEST_CASE("generic checker agrees with the FG1 and FG2 closed forms") {
  for (double l1 : {1.5, 4.0, 20.0})
    for (double l2 : {2.0, 9.0})
      for (double beta : {0.5, 3.0})
        for (double ratio : {-0.4, 0.05, 0.3, 0.6, 0.85, 0.99, 1.2}) {
          const double alpha = ratio * beta;
          const auto c1 = make_hyperbolic(kInfinity, 0, l1), c2 = make_hyperbolic(alpha, beta, l2);
          const std::vector<MoebiusElement> t{c1, c2, inverse(c1 * c2)};
          const double k2 = std::pow((std::sqrt(l1) + std::sqrt(l2)) / (1 + std::sqrt(l1 * l2)), 2);
          if (std::abs(ratio - k2) < 1e-3) continue;
          bool generic;
          try {
            generic = is_sequential_set(t, {0, 3, 0});
          } catch (const Error&) {
            generic = false;
          }
          CAPTURE(l1);
          CAPTURE(l2);
          CAPTURE(alpha);
          CHECK(generic == fg1_condition(l1, l2, alpha, beta));
        }
  for (double l1 : {1.5, 4.0, 20.0})
    for (double alpha : {0.3, 2.0})
      for (double scale : {0.5, 0.9, 1.1, 3.0}) {
        const double l2 = scale * (std::sqrt(l1) + 1) / ((std::sqrt(l1) - 1) * alpha);
        const auto c1 = make_hyperbolic(kInfinity, 0, l1), c2 = make_parabolic(alpha, l2);
        const std::vector<MoebiusElement> t{c1, c2, inverse(c1 * c2)};
        bool generic;
        try {
          generic = is_sequential_set(t, {0, 2, 1});
        } catch (const Error&) {
          generic = false;
        }
        CAPTURE(l1);
        CAPTURE(scale);
        CHECK(generic == fg2_condition(l1, l2, alpha));
      }
}

TEST_CASE("built families") {
  for (const auto& sig : sequential_families()) {
    CAPTURE(sig.to_string());
    const auto set = build_sequential_set(sig);
    CHECK(set.sig == sig);
    CHECK(is_sequential_set(set.elements, sig));
  }
  const auto p3 = build_sequential_set({0, 0, 3});
  CHECK(p3.elements[0].distance(make_parabolic(kInfinity, 1)) < 1e-15);
  CHECK(p3.elements[1].distance(make_parabolic(1, 4)) < 1e-15);
  CHECK(code_of([] { build_sequential_set({0, 3, 0}, {4, 4, 0.5, 1}); }) == ErrorCode::OutOfValidityRegion);
  CHECK(code_of([] { build_sequential_set({1, 1, 0}, {5}); }) == ErrorCode::OutOfValidityRegion);
  CHECK(code_of([] { build_sequential_set({2, 0, 0}); }) == ErrorCode::InvalidSignature);
  CHECK(is_sequential_set(build_sequential_set({0, 3, 0}, {2, 30, 1.5, 2}).elements, {0, 3, 0}));
  CHECK(is_sequential_set(build_sequential_set({1, 1, 0}, {50}).elements, {1, 1, 0}));
}

TEST_CASE("genus-one commutator threshold") {
  const auto critical = build_sequential_set({1, 0, 1});
  CHECK(std::abs(commutator_trace(critical.elements[0], critical.elements[1]) + 2) < 1e-8);
  const auto nine = build_sequential_set({1, 1, 0}, {9});
  CHECK(std::abs(commutator_trace(nine.elements[0], nine.elements[1]) + 862.0 / 81) < 1e-10);
  CHECK(axes_intersect(nine.elements[0], nine.elements[1]));
}

TEST_CASE("sequential triples jump by one") {
  for (const auto& sig : std::vector<SurfaceSignature>{{0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}}) {
    const auto set = build_sequential_set(sig);
    CHECK(oracle_jump(set.elements[0], set.elements[1]) == 1);
    CHECK(product_jump_closed_form(set.elements[0], set.elements[1]) == 1);
  }
  const auto g1 = build_sequential_set({1, 1, 0});
  CHECK(oracle_jump(g1.elements[0], g1.elements[1]) == 0);
}

TEST_CASE("lift examples") {
  const auto p3 = build_sequential_set({0, 0, 3});
  for (long l3 = -3; l3 <= 3; ++l3) {
    const auto c = check_lift_relation(p3, {0, 0, l3}, 3);
    CHECK(c.winding_verdict == ((l3 + 1) % 3 == 0));
    CHECK(c.agree());
  }
  const auto g1 = build_sequential_set({1, 1, 0});
  for (long la : {-2, 0, 3})
    for (long lb : {-1, 1}) {
      CHECK(check_lift_relation(g1, {la, lb, -1}, 4).winding_verdict);
      CHECK_FALSE(check_lift_relation(g1, {la, lb, 0}, 4).winding_verdict);
    }
  CHECK(check_lift_relation(p3, {0, 0, -1 + 3}, 3).winding_verdict == check_lift_relation(p3, {0, 0, -1}, 3).winding_verdict);
  auto bad = p3;
  bad.elements[2] = make_parabolic(0, 1);
  CHECK(code_of([&] { check_lift_relation(bad, {0, 0, 0}, 3); }) == ErrorCode::RelatorNotIdentity);
  CHECK(code_of([&] { check_lift_relation(p3, {0, 0}, 3); }) == ErrorCode::LengthMismatch);
}

TEST_CASE("winding equals the level sum minus the boundary target") {
  for (const auto& sig : sequential_families()) {
    const auto set = build_sequential_set(sig);
    std::vector<long> levels(set.elements.size(), 0);
    const int m = 4;
    std::function<void(std::size_t)> visit = [&](std::size_t i) {
      if (i == levels.size()) {
        const auto c = check_lift_relation(set, levels, m);
        long sum = 0;
        for (std::size_t k = 2 * sig.genus; k < levels.size(); ++k) sum += levels[k];
        REQUIRE(c.winding == sum - ((2 - 2 * sig.genus) - sig.boundary()));
        REQUIRE(c.agree());
        return;
      }
      for (long l = -m; l <= m; ++l) {
        levels[i] = l;
        visit(i + 1);
      }
    };
    visit(0);
  }
}
