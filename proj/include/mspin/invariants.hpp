#pragma once

#include <utility>
#include <vector>

#include "mspin/arf_calculus.hpp"
#include "mspin/core_types.hpp"

namespace mspin {

/// Arf invariant. g = 1: gcd(m, alpha_1, beta_1, gamma_i + 1), in [1, m].
/// g > 1: 0 for odd m or when a boundary value is even, otherwise the parity
/// of sum (1 - alpha_i)(1 - beta_i). g = 0: 0.
int arf_invariant_delta(const ArfBasisValues& arf);

ArfType type_of(const ArfBasisValues& arf);

/// Realisability of a type on the given signature.
bool is_realizable_type(const ArfType& ty, const SurfaceSignature& sig, int m);

/// All realisable types, sorted and duplicate-free.
std::vector<ArfType> enumerate_realizable_types(const SurfaceSignature& sig, int m);

struct NormalForm {
  ArfBasisValues values;
  TwistWord word;
};

/// Constructive normal form: applying `word` to the input yields `values`.
///   g > 1: handles (0, xi, 1, 1, ..., 1) with xi = 1 - delta.
///   g = 1: handle (delta mod m, 0).
///   boundary values sorted ascending within each block.
/// For g = 0 only the sort is performed.
NormalForm normalize(const ArfBasisValues& arf);

/// True iff the values have the shape normalize() promises for their type.
bool is_normal_form(const ArfBasisValues& arf);

}  // namespace mspin
