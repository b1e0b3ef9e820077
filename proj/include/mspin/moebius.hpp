#pragma once

#include <array>
#include <complex>
#include <limits>
#include <optional>
#include <vector>

#include "mspin/error.hpp"

namespace mspin {

/// Boundary points of the upper half-plane are reals or +infinity.
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Raw 2x2 real matrix; SL(2,R) representatives before sign normalisation.
struct Mat2 {
  double a = 1, b = 0, c = 0, d = 1;

  double trace() const noexcept { return a + d; }
  double det() const noexcept { return a * d - b * c; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) noexcept {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
};

/// An element of PSL(2,R): unit determinant, trace >= 0, and for trace 0
/// the first nonzero of (c, a) positive.
class MoebiusElement {
 public:
  MoebiusElement() = default;
  /// Rescales to determinant 1 and picks the canonical sign. The
  /// determinant must be positive.
  explicit MoebiusElement(const Mat2& m);
  MoebiusElement(double a, double b, double c, double d) : MoebiusElement(Mat2{a, b, c, d}) {}

  static MoebiusElement identity() { return {}; }

  double a() const noexcept { return m_.a; }
  double b() const noexcept { return m_.b; }
  double c() const noexcept { return m_.c; }
  double d() const noexcept { return m_.d; }
  double trace() const noexcept { return m_.a + m_.d; }
  const Mat2& matrix() const noexcept { return m_; }

  /// Image of a boundary point (kInfinity allowed).
  double apply(double x) const noexcept;

  /// Sup-norm distance of the canonical representatives.
  double distance(const MoebiusElement& other) const noexcept;

 private:
  Mat2 m_{};
};

MoebiusElement compose(const MoebiusElement& g, const MoebiusElement& h);
MoebiusElement inverse(const MoebiusElement& g);
MoebiusElement conjugate(const MoebiusElement& by, const MoebiusElement& g);  // by * g * by^-1

inline MoebiusElement operator*(const MoebiusElement& g, const MoebiusElement& h) { return compose(g, h); }

/// tau_{alpha,beta}(lambda): hyperbolic with attracting fixed point alpha and
/// repelling fixed point beta when lambda > 1. Either point may be kInfinity.
MoebiusElement make_hyperbolic(double alpha, double beta, double lambda);

/// pi_alpha(lambda); alpha may be kInfinity.
MoebiusElement make_parabolic(double alpha, double lambda);

/// Counterclockwise rotation through phi about x in the upper half-plane
/// (derivative e^{i phi} at x).
MoebiusElement make_elliptic(std::complex<double> x, double phi);

enum class ElementClass { Identity, Hyperbolic, Parabolic, Elliptic };

const char* to_string(ElementClass cls);

inline constexpr double kClassBand = 1e-9;

struct ElementInfo {
  ElementClass cls = ElementClass::Identity;
  /// Hyperbolic: {attracting, repelling}. Parabolic: {fixed point}.
  std::vector<double> fixed_points;
  /// Hyperbolic: shift parameter > 1. Parabolic: translation parameter
  /// (lambda in pi_alpha(lambda)). Otherwise 0.
  double shift = 0;
  bool positive = false;
  /// Elliptic only.
  std::complex<double> interior_fixed_point{};
};

/// Classifies by |trace|. Traces within kClassBand of 2 are parabolic only
/// when exactly 2 or when `expected` is Parabolic; otherwise Degenerate.
ElementInfo element_info(const MoebiusElement& g, std::optional<ElementClass> expected = std::nullopt);

/// True when |trace| >= 2 - kClassBand (hyperbolic, parabolic, identity or
/// inside the band).
bool has_level(const MoebiusElement& g) noexcept;

/// Argument psi in (-pi, pi] with tan(psi/2) = (b - c)/(a + d).
double principal_argument(const MoebiusElement& g) noexcept;
double raw_argument(const Mat2& m) noexcept;

/// Trace of A B A^-1 B^-1; independent of sign representatives.
double commutator_trace(const MoebiusElement& a, const MoebiusElement& b);

}  // namespace mspin
