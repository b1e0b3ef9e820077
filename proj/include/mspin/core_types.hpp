#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mspin/error.hpp"

namespace mspin {

using Residue = int;

/// The order m of the cyclic cover; always at least 2.
class Modulus {
 public:
  explicit Modulus(int m);

  int value() const noexcept { return m_; }

  /// Canonical representative in [0, m).
  Residue reduce(long long x) const noexcept {
    long long r = x % m_;
    return static_cast<Residue>(r < 0 ? r + m_ : r);
  }

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  int m_;
};

/// Topological type (g, l_h, l_p) of a surface.
struct SurfaceSignature {
  int genus = 0;
  int holes = 0;
  int punctures = 0;

  int boundary() const noexcept { return holes + punctures; }
  /// n = g + l_h + l_p, the index of the last basis element c_n.
  int n() const noexcept { return genus + holes + punctures; }
  bool closed() const noexcept { return boundary() == 0; }

  std::string to_string() const;

  friend auto operator<=>(const SurfaceSignature&, const SurfaceSignature&) = default;
};

/// Hyperbolicity gate: 2 - 2g - l_h - l_p < 0 (g >= 2 for closed surfaces).
bool validate_signature(const SurfaceSignature& sig) noexcept;

/// Throws InvalidSignature unless validate_signature holds.
void require_valid(const SurfaceSignature& sig);

/// Dimension 6g + 3l_h + 2l_p - 6 of the Teichmueller space.
int teich_dimension(const SurfaceSignature& sig);

/// The residue every boundary-value sum must equal: (2 - 2g) - (l_h + l_p) mod m.
Residue boundary_sum_target(const SurfaceSignature& sig, Modulus m);

/// Number of m-Arf functions on a surface of the given type.
std::uint64_t arf_count(const SurfaceSignature& sig, Modulus m);

/// Values of an Arf function on a standard basis. Construct through
/// `new_arf` (arf_calculus.hpp), which enforces the boundary-sum constraint.
struct ArfBasisValues {
  int m = 2;
  SurfaceSignature sig;
  std::vector<Residue> alpha;
  std::vector<Residue> beta;
  std::vector<Residue> holes;
  std::vector<Residue> punctures;

  /// (alpha_1, beta_1, ..., alpha_g, beta_g, holes..., punctures...)
  std::vector<Residue> flatten() const;

  friend bool operator==(const ArfBasisValues&, const ArfBasisValues&) = default;
  /// Lexicographic on the flattened tuple.
  friend std::strong_ordering operator<=>(const ArfBasisValues& a, const ArfBasisValues& b);
};

/// Orbit label (g, delta, n^h_0..n^h_{m-1}, n^p_0..n^p_{m-1}).
struct ArfType {
  int genus = 0;
  int delta = 0;
  std::vector<int> n_h;
  std::vector<int> n_p;

  std::string to_string() const;

  friend auto operator<=>(const ArfType&, const ArfType&) = default;
};

/// A Z_m-valued linear function on H_1: values on [a_i], [b_i] and on the
/// boundary classes; boundary values sum to zero.
struct LinearFunctional {
  int m = 2;
  SurfaceSignature sig;
  std::vector<Residue> on_a;
  std::vector<Residue> on_b;
  std::vector<Residue> on_boundary;

  friend bool operator==(const LinearFunctional&, const LinearFunctional&) = default;
};

/// "0,1,1" style rendering of a residue tuple.
std::string format_tuple(std::span<const Residue> values);

/// Checks lengths, residue ranges and the zero boundary sum.
void validate_functional(const LinearFunctional& f);

}  // namespace mspin
