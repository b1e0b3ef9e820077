#include "mspin/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace mspin {

namespace {

constexpr double kIdentityTol = 1e-12;
constexpr double kZeroEntry = 1e-13;

Mat2 canonical(Mat2 m) {
  const double det = m.det();
  if (!(det > 0) || !std::isfinite(det))
    throw Error(ErrorCode::DegenerateElement, "matrix determinant must be positive, got " + std::to_string(det));
  const double s = 1.0 / std::sqrt(det);
  m = {m.a * s, m.b * s, m.c * s, m.d * s};
  bool flip = m.trace() < 0;
  if (m.trace() == 0) flip = m.c != 0 ? m.c < 0 : m.a < 0;
  if (flip) m = {-m.a, -m.b, -m.c, -m.d};
  return m;
}

bool is_inf(double x) { return std::isinf(x); }

}  // namespace

MoebiusElement::MoebiusElement(const Mat2& m) : m_(canonical(m)) {}

double MoebiusElement::apply(double x) const noexcept {
  if (is_inf(x)) return m_.c == 0 ? kInfinity : m_.a / m_.c;
  const double den = m_.c * x + m_.d;
  if (den == 0) return kInfinity;
  return (m_.a * x + m_.b) / den;
}

double MoebiusElement::distance(const MoebiusElement& o) const noexcept {
  return std::max({std::abs(m_.a - o.m_.a), std::abs(m_.b - o.m_.b), std::abs(m_.c - o.m_.c),
                   std::abs(m_.d - o.m_.d)});
}

MoebiusElement compose(const MoebiusElement& g, const MoebiusElement& h) {
  return MoebiusElement(g.matrix() * h.matrix());
}

MoebiusElement inverse(const MoebiusElement& g) {
  return MoebiusElement(Mat2{g.d(), -g.b(), -g.c(), g.a()});
}

MoebiusElement conjugate(const MoebiusElement& by, const MoebiusElement& g) {
  return compose(compose(by, g), inverse(by));
}

MoebiusElement make_hyperbolic(double alpha, double beta, double lambda) {
  if (!(lambda > 0) || lambda == 1 || !std::isfinite(lambda))
    throw Error(ErrorCode::DegenerateParameters, "shift parameter must be positive and different from 1");
  if (alpha == beta || (is_inf(alpha) && is_inf(beta)) || std::isnan(alpha) || std::isnan(beta))
    throw Error(ErrorCode::DegenerateParameters, "fixed points must be distinct");
  const double sl = std::sqrt(lambda);
  if (is_inf(alpha)) return MoebiusElement(Mat2{lambda / sl, -(lambda - 1) * beta / sl, 0, 1 / sl});
  if (is_inf(beta)) return MoebiusElement(Mat2{1 / sl, (lambda - 1) * alpha / sl, 0, lambda / sl});
  const double s = 1.0 / ((alpha - beta) * sl);
  return MoebiusElement(Mat2{(lambda * alpha - beta) * s, -(lambda - 1) * alpha * beta * s, (lambda - 1) * s,
                             (alpha - lambda * beta) * s});
}

MoebiusElement make_parabolic(double alpha, double lambda) {
  if (lambda == 0 || !std::isfinite(lambda) || std::isnan(alpha))
    throw Error(ErrorCode::DegenerateParameters, "parabolic parameter must be finite and nonzero");
  if (is_inf(alpha)) return MoebiusElement(Mat2{1, lambda, 0, 1});
  return MoebiusElement(Mat2{1 - lambda * alpha, lambda * alpha * alpha, -lambda, 1 + lambda * alpha});
}

MoebiusElement make_elliptic(std::complex<double> x, double phi) {
  if (!(x.imag() > 0)) throw Error(ErrorCode::DegenerateParameters, "rotation centre must lie in the upper half-plane");
  const double c = std::cos(phi / 2), s = std::sin(phi / 2);
  const MoebiusElement rot(Mat2{c, s, -s, c});
  const double sv = std::sqrt(x.imag());
  const MoebiusElement move(Mat2{sv, x.real() / sv, 0, 1 / sv});  // i -> x
  return conjugate(move, rot);
}

const char* to_string(ElementClass cls) {
  switch (cls) {
    case ElementClass::Identity: return "identity";
    case ElementClass::Hyperbolic: return "hyperbolic";
    case ElementClass::Parabolic: return "parabolic";
    case ElementClass::Elliptic: return "elliptic";
  }
  return "?";
}

ElementInfo element_info(const MoebiusElement& g, std::optional<ElementClass> expected) {
  ElementInfo info;
  const double a = g.a(), b = g.b(), c = g.c(), d = g.d();
  if (g.distance(MoebiusElement::identity()) <= kIdentityTol) return info;
  const double t = g.trace();
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d), 1.0});
  const bool c_zero = std::abs(c) <= kZeroEntry * scale;

  const bool in_band = std::abs(t - 2) <= kClassBand;
  if (in_band) {
    if (t != 2 && expected != ElementClass::Parabolic)
      throw Error(ErrorCode::Degenerate, "|trace| = " + std::to_string(t) + " is within the classification band");
    info.cls = ElementClass::Parabolic;
    if (c_zero) {
      info.fixed_points = {kInfinity};
      info.shift = b / a;  // z -> z + b/d with a = d = 1
    } else {
      info.fixed_points = {(a - d) / (2 * c)};
      info.shift = -c;
    }
    info.positive = info.shift > 0;
    return info;
  }
  if (t > 2) {
    info.cls = ElementClass::Hyperbolic;
    const double root = std::sqrt(t * t - 4);
    const double eig = (t + root) / 2;  // > 1
    info.shift = eig * eig;
    double attracting, repelling;
    if (c_zero) {
      // z -> (a z + b)/d; infinity attracts iff a > d.
      const double finite = b / (d - a);
      attracting = a > d ? kInfinity : finite;
      repelling = a > d ? finite : kInfinity;
    } else {
      const double x1 = ((a - d) + root) / (2 * c);
      const double x2 = ((a - d) - root) / (2 * c);
      // Derivative at a fixed point x is (c x + d)^-2; attracting iff |c x + d| > 1.
      const bool first_attracts = std::abs(c * x1 + d) > 1;
      attracting = first_attracts ? x1 : x2;
      repelling = first_attracts ? x2 : x1;
    }
    info.fixed_points = {attracting, repelling};
    info.positive = attracting < repelling;
    return info;
  }
  info.cls = ElementClass::Elliptic;
  const double disc = std::sqrt(std::max(0.0, 4 - t * t));
  if (c_zero) {
    info.interior_fixed_point = {0, 0};
  } else {
    std::complex<double> z((a - d) / (2 * c), disc / (2 * c));
    if (z.imag() < 0) z = std::conj(z);
    info.interior_fixed_point = z;
  }
  return info;
}

bool has_level(const MoebiusElement& g) noexcept { return g.trace() >= 2 - kClassBand; }

double raw_argument(const Mat2& m) noexcept { return 2 * std::atan2(m.b - m.c, m.a + m.d); }

double principal_argument(const MoebiusElement& g) noexcept {
  double psi = raw_argument(g.matrix());
  if (psi <= -std::numbers::pi) psi += 2 * std::numbers::pi;
  return psi;
}

double commutator_trace(const MoebiusElement& a, const MoebiusElement& b) {
  const Mat2& x = a.matrix();
  const Mat2& y = b.matrix();
  const Mat2 xi{x.d, -x.b, -x.c, x.a};
  const Mat2 yi{y.d, -y.b, -y.c, y.a};
  return (x * y * xi * yi).trace();
}

}  // namespace mspin
