#include "mspin/lifting.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mspin/core_types.hpp"

namespace mspin {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kChartMargin = 1e-9;
constexpr int kInitialSteps = 32;
constexpr int kMaxDepth = 40;
// Tracking runs on the half-angle arg((a + d) + i(b - c)), whose change
// along any canonical path is below pi, so wrapped steps cannot alias.
constexpr double kMaxStep = kPi / 8;

double wrap(double x) {
  x = std::remainder(x, 2 * kPi);
  return x <= -kPi ? x + 2 * kPi : x;
}

void require_level(const MoebiusElement& g) {
  if (!has_level(g)) throw Error(ErrorCode::EllipticUnsupported, "elliptic elements carry no level");
}

/// The path s -> exp(s log g) from the identity to g.
class OneParameterPath {
 public:
  explicit OneParameterPath(const MoebiusElement& g) {
    const Mat2& m = g.matrix();
    h_ = m.trace() / 2;
    n_ = {m.a - h_, m.b, m.c, m.d - h_};
    q_ = h_ * h_ - 1;
    if (q_ > 1e-14) {
      kind_ = Kind::Hyperbolic;
      theta_ = std::acosh(h_);
      lambda_ = std::exp(2 * theta_);
    } else if (q_ < -1e-14) {
      kind_ = Kind::Rotation;
      theta_ = std::acos(std::min(1.0, h_));
    } else {
      kind_ = Kind::Unipotent;
    }
  }

  Mat2 at(double t) const {
    const double s = param(t);
    double c, f;
    switch (kind_) {
      case Kind::Hyperbolic:
        c = std::cosh(s * theta_);
        f = std::sinh(s * theta_) / std::sinh(theta_);
        break;
      case Kind::Rotation:
        c = std::cos(s * theta_);
        f = std::sin(s * theta_) / std::sin(theta_);
        break;
      default:
        c = 1;
        f = s;
    }
    return {c + f * n_.a, f * n_.b, f * n_.c, c + f * n_.d};
  }

 private:
  enum class Kind { Hyperbolic, Rotation, Unipotent };

  double param(double t) const {
    if (kind_ != Kind::Hyperbolic || t <= 0 || t >= 1) return t;
    return std::log1p(t * (lambda_ - 1)) / std::log(lambda_);
  }

  Kind kind_ = Kind::Unipotent;
  double h_ = 1, q_ = 0, theta_ = 0, lambda_ = 1;
  Mat2 n_{0, 0, 0, 0};
};

class Tracker {
 public:
  Tracker(const Mat2& left, const OneParameterPath& path) : left_(left), path_(path) {}

  double total() {
    double sum = 0;
    double prev = value(0);
    for (int i = 1; i <= kInitialSteps; ++i) {
      const double t1 = static_cast<double>(i) / kInitialSteps;
      const double next = value(t1);
      sum += segment(static_cast<double>(i - 1) / kInitialSteps, t1, prev, next, 0);
      prev = next;
    }
    return sum;
  }

 private:
  double value(double t) const {
    const Mat2 m = left_ * path_.at(t);
    return std::atan2(m.b - m.c, m.a + m.d);
  }

  double segment(double t0, double t1, double v0, double v1, int depth) const {
    const double delta = wrap(v1 - v0);
    if (std::abs(delta) < kMaxStep) return delta;
    if (depth >= kMaxDepth)
      throw Error(ErrorCode::PathThroughDegeneracy, "argument tracking did not converge");
    const double tm = (t0 + t1) / 2;
    const double vm = value(tm);
    return segment(t0, tm, v0, vm, depth + 1) + segment(tm, t1, vm, v1, depth + 1);
  }

  Mat2 left_;
  const OneParameterPath& path_;
};

}  // namespace

LiftedElement lift(const MoebiusElement& g, long level) {
  require_level(g);
  return {g, principal_argument(g) + 2 * kPi * static_cast<double>(level)};
}

long level_of(const LiftedElement& le) {
  require_level(le.base);
  const double x = le.lifted_argument;
  const double odd = 2 * std::round((x - kPi) / (2 * kPi)) + 1;
  if (std::abs(x - odd * kPi) <= kChartMargin)
    throw Error(ErrorCode::ChartBoundary, "lifted argument " + std::to_string(x) + " lies on a chart boundary");
  return std::lround(x / (2 * kPi));
}

int level_mod(const LiftedElement& le, int m) { return Modulus(m).reduce(level_of(le)); }

LiftedElement lifted_inverse(const LiftedElement& le) {
  require_level(le.base);
  return {inverse(le.base), -le.lifted_argument};
}

LiftedElement lifted_product(const LiftedElement& le1, const LiftedElement& le2) {
  require_level(le2.base);
  const double sheets = std::round((le2.lifted_argument - principal_argument(le2.base)) / (2 * kPi));
  const OneParameterPath path(le2.base);
  Tracker tracker(le1.base.matrix(), path);
  const double arg = le1.lifted_argument + 2 * tracker.total() + 2 * kPi * sheets;
  return {compose(le1.base, le2.base), arg};
}

}  // namespace mspin
