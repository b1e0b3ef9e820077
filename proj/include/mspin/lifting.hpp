#pragma once

#include "mspin/moebius.hpp"

namespace mspin {

/// A point of the universal cover: a Moebius element with a continuous lift
/// of its argument. For hyperbolic and parabolic elements the level k is the
/// integer with lifted_argument in (-pi + 2 pi k, pi + 2 pi k).
struct LiftedElement {
  MoebiusElement base;
  double lifted_argument = 0;
};

/// principal_argument(g) + 2 pi k. `g` must carry a level.
LiftedElement lift(const MoebiusElement& g, long level);

/// The chart integer; ChartBoundary within 1e-9 of an odd multiple of pi.
long level_of(const LiftedElement& le);
int level_mod(const LiftedElement& le, int m);

/// Inverse in the cover of an element that carries a level.
LiftedElement lifted_inverse(const LiftedElement& le);

/// Product in the cover. The argument is tracked along g1 * p(t), where
/// p is the one-parameter path from the identity to g2 through
/// tau(1 + t(lambda - 1)) (hyperbolic) or pi(t lambda) (parabolic).
/// The right factor must carry a level; the left factor is arbitrary.
LiftedElement lifted_product(const LiftedElement& le1, const LiftedElement& le2);

}  // namespace mspin
