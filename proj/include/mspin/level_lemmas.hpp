#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "mspin/moebius.hpp"

namespace mspin {

/// lev(AB) - lev(A) - lev(B) from the three product lemmas, after
/// conjugating A (or, by symmetry, B or the inverses) to tau_{inf,0}(l1)
/// or pi_inf(l1). NotCovered outside their hypotheses or for elliptic AB.
int product_jump_closed_form(const MoebiusElement& a, const MoebiusElement& b);

/// The same jump from the path-lifting oracle.
long oracle_jump(const MoebiusElement& a, const MoebiusElement& b);

/// True iff the fixed-point pairs interleave on the boundary circle.
/// SharedFixedPoint when the pairs meet.
bool axes_intersect(const MoebiusElement& a, const MoebiusElement& b);

enum class Regime { HypHypPlus, HypHypMinus, HypHypZero, HypParZero, HypParOne, ParParZero, ParParOne };

inline constexpr Regime kAllRegimes[] = {Regime::HypHypPlus, Regime::HypHypMinus, Regime::HypHypZero,
                                         Regime::HypParZero, Regime::HypParOne,   Regime::ParParZero,
                                         Regime::ParParOne};

std::string_view to_string(Regime regime);

/// The jump the regime's lemma predicts.
int expected_jump(Regime regime);

/// Seeded pairs (A, B) from a lemma regime, randomly conjugated. Products
/// with |tr(AB)| < 2 + 1e-6 are rejected.
std::vector<std::pair<MoebiusElement, MoebiusElement>> sample_regime(Regime regime, std::size_t count,
                                                                     std::uint64_t seed);

/// Random element of PSL(2,R) with moderate entries.
MoebiusElement random_conjugator(std::uint64_t seed);

struct RegimeResult {
  Regime regime;
  std::size_t requested = 0;
  std::size_t samples = 0;
  std::size_t agreements = 0;
  std::size_t chart_failures = 0;
  std::size_t lemma_mismatches = 0;

  bool ok() const noexcept { return samples == requested && agreements == samples && chart_failures == 0 && lemma_mismatches == 0; }
};

/// Closed form vs oracle on `count` samples of a regime.
RegimeResult compare_regime(Regime regime, std::size_t count, std::uint64_t seed);

}  // namespace mspin
