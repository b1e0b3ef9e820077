#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "mspin/level_lemmas.hpp"
#include "mspin/lifting.hpp"

using namespace mspin;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

MoebiusElement random_level_element(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-3, 3);
  const MoebiusElement c = random_conjugator(rng());
  if (rng() % 2) return conjugate(c, make_hyperbolic(u(rng), kInfinity, std::exp(u(rng))));
  return conjugate(c, make_parabolic(kInfinity, u(rng)));
}

}  // namespace

TEST_CASE("lift examples") {
  const auto u = lift(MoebiusElement::identity(), 1);
  CHECK(u.lifted_argument == Approx(2 * kPi));
  CHECK(level_of(u) == 1);
  const auto h = lift(MoebiusElement(2, 0, 0, 0.5), 0);
  CHECK(h.lifted_argument == 0);
  CHECK(level_of(h) == 0);
  CHECK(level_of(lift(make_parabolic(1, 4), -2)) == -2);
  CHECK(level_mod(lift(make_parabolic(1, 4), -2), 3) == 1);
  CHECK_THROWS_AS(lift(make_elliptic({0, 1}, 1), 0), Error);
}

TEST_CASE("chart arithmetic") {
  const auto id = MoebiusElement::identity();
  CHECK(level_of({id, 0}) == 0);
  CHECK(level_of({id, 2 * kPi}) == 1);
  CHECK(level_of({id, -5.9}) == -1);
  try {
    level_of({id, 3 * kPi});
    FAIL("expected ChartBoundary");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ChartBoundary);
  }
}

TEST_CASE("lifted product examples") {
  const auto a = make_parabolic(kInfinity, 1), b = make_parabolic(1, 4);
  const auto p = lifted_product(lift(a, 0), lift(b, 0));
  CHECK(level_of(p) == 1);
  CHECK(p.base.distance(a * b) < 1e-12);
  const auto le = lift(make_hyperbolic(0.4, 2, 3), 2);
  const auto same = lifted_product(le, lift(MoebiusElement::identity(), 0));
  CHECK(same.lifted_argument == Approx(le.lifted_argument));
  CHECK(same.base.distance(le.base) < 1e-15);
  const auto g = make_hyperbolic(-0.7, 5, 12);
  const auto q = lifted_product(lift(g, 0), lift(inverse(g), 0));
  CHECK(level_of(q) == 0);
  CHECK(q.base.distance(MoebiusElement::identity()) < 1e-12);
  CHECK(lifted_product(lift(g, 3), lift(MoebiusElement::identity(), -1)).lifted_argument ==
        Approx(lift(g, 2).lifted_argument));
}

TEST_CASE("lifted argument agrees with the base argument") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_level_element(rng), b = random_level_element(rng);
    const auto p = lifted_product(lift(a, 0), lift(b, 0));
    const double diff = std::remainder(p.lifted_argument - principal_argument(p.base), 2 * kPi);
    CHECK(std::abs(diff) < 1e-9);
  }
}

TEST_CASE("inversion negates the level") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_level_element(rng);
    const long k = static_cast<long>(rng() % 7) - 3;
    const auto inv = lifted_product(lift(MoebiusElement::identity(), 0), lifted_inverse(lift(a, k)));
    REQUIRE(level_of(inv) == -k);
    // The oracle route: A^-1 as the product identity * (A^-1 at level -k).
    const auto back = lifted_product(lift(a, k), lifted_inverse(lift(a, k)));
    REQUIRE(level_of(back) == 0);
  }
}

TEST_CASE("conjugation preserves the level") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_level_element(rng), b = random_level_element(rng);
    const long k = static_cast<long>(rng() % 5) - 2, kb = static_cast<long>(rng() % 5) - 2;
    const auto bt = lift(b, kb);
    const auto conj = lifted_product(lifted_product(bt, lift(a, k)), lifted_inverse(bt));
    REQUIRE(level_of(conj) == k);
  }
}
