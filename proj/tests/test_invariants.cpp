#include <algorithm>
#include <random>

#include "doctest.h"
#include "mspin/arf_calculus.hpp"
#include "mspin/cli.hpp"
#include "mspin/invariants.hpp"
#include "oracles.hpp"

using namespace mspin;

TEST_CASE("delta examples") {
  CHECK(arf_invariant_delta(new_arf(6, {1, 1, 0}, {2}, {4}, {5}, {})) == 2);
  CHECK(arf_invariant_delta(new_arf(2, {2, 0, 0}, {0, 1}, {0, 1}, {}, {})) == 1);
  for (const auto& v : enumerate_arfs(2, {2, 0, 1}))
    if (v.punctures[0] % 2 == 0) CHECK(arf_invariant_delta(v) == 0);
  CHECK(arf_invariant_delta(new_arf(3, {1, 1, 0}, {0}, {0}, {2}, {})) == 3);
  CHECK(arf_invariant_delta(new_arf(3, {0, 0, 3}, {}, {}, {}, {0, 1, 1})) == 0);
}

TEST_CASE("genus-one delta is the gcd") {
  for (int m : {2, 3, 4, 6})
    for (const auto& sig : std::vector<SurfaceSignature>{{1, 1, 0}, {1, 0, 1}, {1, 1, 1}, {1, 2, 0}})
      for (const auto& v : enumerate_arfs(m, sig)) REQUIRE(arf_invariant_delta(v) == oracle::genus_one_gcd(m, v.flatten()));
}

TEST_CASE("classical even spin structure counts") {
  // m = 2, closed genus g: 2^{g-1}(2^g + 1) even, 2^{g-1}(2^g - 1) odd.
  for (int g : {2, 3}) {
    std::uint64_t even = 0, odd = 0;
    for (const auto& v : enumerate_arfs(2, {g, 0, 0})) (arf_invariant_delta(v) == 0 ? even : odd)++;
    CHECK(even == oracle::ipow(2, g - 1) * (oracle::ipow(2, g) + 1));
    CHECK(odd == oracle::ipow(2, g - 1) * (oracle::ipow(2, g) - 1));
  }
}

TEST_CASE("type examples") {
  const auto t1 = type_of(new_arf(2, {2, 0, 1}, {0, 1}, {1, 1}, {}, {1}));
  CHECK(t1 == ArfType{2, 0, {0, 0}, {0, 1}});
  const auto t2 = type_of(new_arf(3, {0, 0, 3}, {}, {}, {}, {0, 1, 1}));
  CHECK(t2 == ArfType{0, 0, {0, 0, 0}, {1, 2, 0}});
  const auto t3 = type_of(new_arf(2, {2, 0, 0}, {0, 0}, {0, 0}, {}, {}));
  CHECK(t3 == ArfType{2, 0, {0, 0}, {0, 0}});
}

TEST_CASE("realisability examples") {
  CHECK(is_realizable_type({2, 1, {0, 0}, {0, 0}}, {2, 0, 0}, 2));
  CHECK_FALSE(is_realizable_type({2, 0, {0, 0, 0}, {0, 0, 0}}, {2, 0, 0}, 3));
  CHECK(is_realizable_type({1, 2, {0, 0, 0, 1}, {0, 0, 0, 0}}, {1, 1, 0}, 4));
  CHECK_FALSE(is_realizable_type({1, 3, {0, 0, 0, 1}, {0, 0, 0, 0}}, {1, 1, 0}, 4));
  CHECK_FALSE(is_realizable_type({2, 1, {1, 0, 0}, {0, 0, 0}}, {2, 1, 0}, 3));
}

TEST_CASE("realisable type lists") {
  CHECK(enumerate_realizable_types({2, 0, 0}, 2).size() == 2);
  const auto p3 = enumerate_realizable_types({0, 0, 3}, 2);
  REQUIRE(p3.size() == 2);
  // Filter over count vectors with n_0 + n_1 = 3 and n_1 odd.
  std::vector<ArfType> expected;
  for (int n1 = 0; n1 <= 3; ++n1)
    if (n1 % 2 == 1) expected.push_back({0, 0, {0, 0}, {3 - n1, n1}});
  std::sort(expected.begin(), expected.end());
  CHECK(p3 == expected);
  const auto t = enumerate_realizable_types({1, 1, 0}, 3);
  REQUIRE(t.size() == 2);
  CHECK(t[0].delta == 1);
  CHECK(t[1].delta == 3);
}

TEST_CASE("every enumerated function has a realisable type satisfying the degree condition") {
  for (int m : {2, 3, 4})
    for (const auto& sig : default_grid())
      for (const auto& v : enumerate_arfs(m, sig)) {
        const auto ty = type_of(v);
        REQUIRE(is_realizable_type(ty, sig, m));
        long long s = 0;
        for (int j = 0; j < m; ++j) s += static_cast<long long>(j) * (ty.n_h[j] + ty.n_p[j]);
        REQUIRE(oracle::mod(s, m) == oracle::mod((2 - 2 * sig.genus) - sig.boundary(), m));
      }
}

TEST_CASE("normal form examples") {
  const auto a = normalize(new_arf(3, {2, 1, 0}, {2, 0}, {2, 1}, {0}, {}));
  const auto af = a.values.flatten();
  CHECK(std::vector<Residue>(af.begin(), af.begin() + 4) == std::vector<Residue>{0, 1, 1, 1});
  const auto b = normalize(new_arf(6, {1, 1, 0}, {2}, {4}, {5}, {}));
  CHECK(b.values.flatten() == std::vector<Residue>{2, 0, 5});
  const auto c = normalize(new_arf(2, {2, 0, 0}, {1, 1}, {1, 1}, {}, {}));
  CHECK(c.values.flatten() == std::vector<Residue>{0, 1, 1, 1});
  const auto d = normalize(new_arf(2, {2, 0, 0}, {0, 0}, {0, 1}, {}, {}));
  CHECK(d.values.flatten() == std::vector<Residue>{0, 0, 1, 1});
  const auto z = normalize(new_arf(3, {0, 0, 3}, {}, {}, {}, {2, 0, 0}));
  CHECK(z.values.punctures == std::vector<Residue>{0, 0, 2});
  CHECK(apply_word(new_arf(3, {0, 0, 3}, {}, {}, {}, {2, 0, 0}), z.word) == z.values);
}

TEST_CASE("normalisation is witnessed and type-preserving on the grid") {
  for (int m : {2, 3, 4})
    for (const auto& sig : default_grid())
      for (const auto& v : enumerate_arfs(m, sig)) {
        const auto nf = normalize(v);
        REQUIRE(apply_word(v, nf.word) == nf.values);
        REQUIRE(type_of(nf.values) == type_of(v));
        REQUIRE(is_normal_form(nf.values));
      }
}

TEST_CASE("invariants are constant along random twist words") {
  std::mt19937_64 rng(7);
  for (int m : {2, 4, 6})
    for (const auto& sig : std::vector<SurfaceSignature>{{1, 1, 1}, {1, 2, 0}, {2, 1, 0}, {2, 0, 2}, {3, 0, 1}}) {
      const auto gens = twist_generators(sig, m);
      const auto all = enumerate_arfs(m, sig);
      for (int trial = 0; trial < 50; ++trial) {
        auto v = all[rng() % all.size()];
        const auto flat0 = v.flatten();
        const bool odd_boundary = std::all_of(flat0.begin() + 2 * sig.genus, flat0.end(), [](int x) { return x % 2; });
        auto parity = [&](const ArfBasisValues& w) {
          int s = 0;
          for (int i = 0; i < sig.genus; ++i) s += (1 - w.alpha[i]) * (1 - w.beta[i]);
          return oracle::mod(s, 2);
        };
        const auto p0 = parity(v);
        const int g0 = sig.genus == 1 ? oracle::genus_one_gcd(m, flat0) : 0;
        for (int step = 0; step < 40; ++step) {
          v = apply_twist(v, gens[rng() % gens.size()]);
          if (sig.genus > 1 && m % 2 == 0 && odd_boundary) REQUIRE(parity(v) == p0);
          if (sig.genus == 1) REQUIRE(oracle::genus_one_gcd(m, v.flatten()) == g0);
        }
      }
    }
}
