#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mspin/core_types.hpp"

namespace mspin {

/// Generators of the induced mapping-class-group action on basis values.
///   T1a  alpha_i += sign * beta_i
///   T1b  beta_i  += sign * alpha_i
///   T2   beta_i -= alpha_j + 1, beta_j -= alpha_i + 1   (sign -1: the inverse)
///   T3   (alpha_g, beta_g) -> (-beta_g, alpha_g - gamma - 1)   (sign -1: the inverse)
///   T4   swap handles i and j
///   T5a  negate handle i
///   T5b  (alpha_i, beta_i) -> (-beta_i, alpha_i)   (sign -1: the inverse)
///   HoleSwap / PunctureSwap  exchange boundary values i and i+1 within a block
enum class TwistKind { T1a, T1b, T2, T3, T4, T5a, T5b, HoleSwap, PunctureSwap };

std::string_view to_string(TwistKind kind);

/// Indices are 1-based. For T3, `i` is the position of the boundary value it
/// reads in the combined list (holes first, then punctures).
struct Twist {
  TwistKind kind = TwistKind::T1a;
  int i = 1;
  int j = 0;
  int sign = +1;

  std::string to_string() const;

  friend bool operator==(const Twist&, const Twist&) = default;
};

using TwistWord = std::vector<Twist>;

std::string to_string(const TwistWord& word);

/// Validated construction; raw values are reduced mod m.
ArfBasisValues new_arf(int m, const SurfaceSignature& sig, std::vector<long long> alpha,
                       std::vector<long long> beta, std::vector<long long> holes,
                       std::vector<long long> punctures);

/// Same, from the flattened tuple (alpha_1, beta_1, ..., holes..., punctures...).
ArfBasisValues new_arf(int m, const SurfaceSignature& sig, const std::vector<long long>& flat);

/// Visits every Arf function in lexicographic order of the flattened tuple.
void for_each_arf(int m, const SurfaceSignature& sig, const std::function<void(const ArfBasisValues&)>& visit);

std::vector<ArfBasisValues> enumerate_arfs(int m, const SurfaceSignature& sig);

/// The inverse-closed generator list used for orbit enumeration.
std::vector<Twist> twist_generators(const SurfaceSignature& sig, int m);

/// Throws IndexOutOfRange when the twist does not fit the signature.
void check_twist(const SurfaceSignature& sig, const Twist& twist);

ArfBasisValues apply_twist(const ArfBasisValues& arf, const Twist& twist);
ArfBasisValues apply_word(const ArfBasisValues& arf, const TwistWord& word);

/// In-place action on a flattened tuple; no validation. Used by the BFS.
void apply_twist_flat(std::span<Residue> values, const SurfaceSignature& sig, Modulus m, const Twist& twist);

Twist invert_twist(const Twist& twist);
TwistWord invert_word(const TwistWord& word);

ArfBasisValues add_functional(const ArfBasisValues& arf, const LinearFunctional& f);
LinearFunctional difference(const ArfBasisValues& lhs, const ArfBasisValues& rhs);

}  // namespace mspin
