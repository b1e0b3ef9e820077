#include "doctest.h"
#include "mspin/cli.hpp"
#include "mspin/core_types.hpp"
#include "oracles.hpp"

using namespace mspin;

TEST_CASE("modulus must be at least two") {
  CHECK_THROWS_AS(Modulus(1), Error);
  CHECK(Modulus(5).reduce(-1) == 4);
  CHECK(Modulus(3).reduce(7) == 1);
}

TEST_CASE("signature gate") {
  CHECK(validate_signature({0, 3, 0}));
  CHECK_FALSE(validate_signature({1, 0, 0}));
  CHECK(validate_signature({2, 0, 0}));
  CHECK_FALSE(validate_signature({0, 2, 0}));
  CHECK(validate_signature({0, 0, 3}));
  CHECK_FALSE(validate_signature({-1, 3, 0}));
  CHECK_THROWS_AS(require_valid({1, 0, 0}), Error);
}

TEST_CASE("teichmueller dimension") {
  CHECK(teich_dimension({2, 0, 0}) == 6);
  CHECK(teich_dimension({0, 3, 0}) == 3);
  CHECK(teich_dimension({1, 1, 1}) == 5);
  CHECK_THROWS_AS(teich_dimension({1, 0, 0}), Error);
}

TEST_CASE("boundary sum target") {
  CHECK(boundary_sum_target({0, 0, 3}, Modulus(5)) == 4);
  CHECK(boundary_sum_target({1, 1, 0}, Modulus(6)) == 5);
  CHECK(boundary_sum_target({2, 0, 1}, Modulus(2)) == 1);
  try {
    boundary_sum_target({2, 0, 0}, Modulus(2));
    FAIL("expected ClosedSurface");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ClosedSurface);
  }
}

TEST_CASE("arf count formula") {
  CHECK(arf_count({1, 1, 0}, Modulus(3)) == 9);
  CHECK(arf_count({2, 0, 0}, Modulus(2)) == 16);
  CHECK(arf_count({2, 0, 0}, Modulus(3)) == 0);
  CHECK_THROWS_AS(arf_count({1, 0, 0}, Modulus(2)), Error);
}

TEST_CASE("arf count matches brute-force filtering on the grid") {
  for (int m : {2, 3, 4})
    for (const auto& sig : default_grid()) {
      CAPTURE(sig.to_string());
      CAPTURE(m);
      CHECK(arf_count(sig, Modulus(m)) == oracle::brute_force_arfs(m, sig).size());
    }
}

TEST_CASE("boundary target is the only admissible residue") {
  for (int m : {2, 3, 4})
    for (const auto& sig : default_grid()) {
      if (sig.closed()) continue;
      const int len = 2 * sig.genus + sig.boundary();
      for (const auto& t : oracle::brute_force_arfs(m, sig)) {
        long long s = 0;
        for (int i = 2 * sig.genus; i < len; ++i) s += t[i];
        CHECK(oracle::mod(s, m) == boundary_sum_target(sig, Modulus(m)));
      }
    }
}

TEST_CASE("type ordering and rendering") {
  const ArfType a{1, 1, {0, 1}, {}};
  const ArfType b{1, 2, {0, 1}, {}};
  CHECK(a < b);
  CHECK(a.to_string().find("1") != std::string::npos);
  CHECK(SurfaceSignature{2, 1, 0}.to_string() == "(2,1,0)");
}
