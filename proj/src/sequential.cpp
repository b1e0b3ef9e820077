#include "mspin/sequential.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "mspin/lifting.hpp"

namespace mspin {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kIdentityTol = 1e-8;
constexpr double kWindingTol = 0.01;
const double kCriticalLambda = 3 + 2 * std::sqrt(2.0);

struct Classified {
  MoebiusElement g;
  ElementInfo info;
};

std::optional<Classified> classify(const MoebiusElement& g, ElementClass expected) {
  ElementInfo info;
  try {
    info = element_info(g, expected);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Degenerate) throw Error(ErrorCode::DegenerateElement, e.what());
    throw;
  }
  if (info.cls != expected) return std::nullopt;
  return Classified{g, info};
}

double boundary_angle(double x) { return std::isinf(x) ? kPi : 2 * std::atan(x); }

bool positive(const Classified& c) {
  if (c.info.cls == ElementClass::Parabolic) return c.g.b() - c.g.c() > 0;
  return true;  // hyperbolic positivity is read off the conjugated fixed points
}

/// Positivity and C1 < C2 < C3 after sending a boundary point p to infinity.
bool ordered_after(const std::vector<Classified>& cs, double p) {
  const MoebiusElement d = std::isinf(p) ? MoebiusElement::identity() : MoebiusElement(Mat2{0, -1, 1, -p});
  double previous_max = -kInfinity;
  for (const Classified& c : cs) {
    std::vector<double> fps;
    for (double x : c.info.fixed_points) fps.push_back(d.apply(x));
    for (double x : fps)
      if (!std::isfinite(x)) return false;
    if (c.info.cls == ElementClass::Hyperbolic && !(fps[0] < fps[1])) return false;
    const auto [lo, hi] = std::minmax_element(fps.begin(), fps.end());
    if (!(*lo > previous_max)) return false;
    previous_max = *hi;
  }
  return true;
}

bool is_short_set(const std::vector<MoebiusElement>& triple, const std::vector<ElementClass>& classes) {
  if ((triple[0] * triple[1] * triple[2]).distance(MoebiusElement::identity()) > kIdentityTol) return false;
  std::vector<Classified> cs;
  std::vector<double> angles;
  for (std::size_t i = 0; i < 3; ++i) {
    auto c = classify(triple[i], classes[i]);
    if (!c || !positive(*c)) return false;
    for (double x : c->info.fixed_points) angles.push_back(boundary_angle(x));
    cs.push_back(*c);
  }
  std::sort(angles.begin(), angles.end());
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const double lo = angles[i];
    const double hi = i + 1 < angles.size() ? angles[i + 1] : angles[0] + 2 * kPi;
    if (hi - lo <= 0) continue;
    const double half = (lo + hi) / 4;
    const double p = std::abs(std::cos(half)) < 1e-12 ? kInfinity : std::tan(half);
    if (ordered_after(cs, p)) return true;
  }
  return false;
}

MoebiusElement product(const std::vector<MoebiusElement>& xs, std::size_t first, std::size_t last) {
  MoebiusElement out = MoebiusElement::identity();
  for (std::size_t i = first; i < last; ++i) out = out * xs[i];
  return out;
}

bool is_genus_zero_set(const std::vector<MoebiusElement>& cs, int holes) {
  const std::size_t n = cs.size();
  auto position_class = [&](std::size_t i) {
    return static_cast<int>(i) < holes ? ElementClass::Hyperbolic : ElementClass::Parabolic;
  };
  if (n == 3) {
    // Short sets are matched by class counts up to cyclic order.
    const std::vector<ElementClass> classes{position_class(0), position_class(1), position_class(2)};
    auto near_parabolic = [](const MoebiusElement& x) { return std::abs(std::abs(x.trace()) - 2) <= kClassBand; };
    bool tried = false;
    for (std::size_t r = 0; r < 3; ++r) {
      const std::vector<MoebiusElement> rotated{cs[r], cs[(r + 1) % 3], cs[(r + 2) % 3]};
      bool fits = true;
      for (std::size_t k = 0; k < 3; ++k)
        fits = fits && near_parabolic(rotated[k]) == (classes[k] == ElementClass::Parabolic);
      if (!fits) continue;
      tried = true;
      if (is_short_set(rotated, classes)) return true;
    }
    return !tried && is_short_set(cs, classes);
  }
  for (std::size_t j = 1; j + 1 < n; ++j) {
    const std::vector<MoebiusElement> triple{product(cs, 0, j), cs[j], product(cs, j + 1, n)};
    const std::vector<ElementClass> classes{j == 1 ? position_class(0) : ElementClass::Hyperbolic, position_class(j),
                                            j + 2 == n ? position_class(n - 1) : ElementClass::Hyperbolic};
    if (!is_short_set(triple, classes)) return false;
  }
  return true;
}

void require_in(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::OutOfValidityRegion, what);
}

double param(const std::vector<double>& params, std::size_t i) { return params.at(i); }

SequentialSet genus_zero_family(const SurfaceSignature& sig, const MoebiusElement& c1, const MoebiusElement& c2) {
  SequentialSet set{sig, {c1, c2, inverse(c1 * c2)}};
  require_in(is_sequential_set(set.elements, sig), "parameters do not give a sequential set");
  return set;
}

SequentialSet genus_one_family(const SurfaceSignature& sig, double lambda) {
  const MoebiusElement a0 = make_hyperbolic(kInfinity, 0, lambda);
  const MoebiusElement b0 = make_hyperbolic(-1, 1, lambda);
  for (int flips = 0; flips < 4; ++flips) {
    const MoebiusElement a = flips & 1 ? inverse(a0) : a0;
    const MoebiusElement b = flips & 2 ? inverse(b0) : b0;
    const MoebiusElement c = b * a * inverse(b) * inverse(a);  // [A,B]^-1
    try {
      if (is_sequential_set({a, b, c}, sig)) return {sig, {a, b, c}};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateElement) throw;
    }
  }
  throw Error(ErrorCode::OrientationSearchFailed, "no generator orientation gives a sequential set");
}

}  // namespace

bool is_sequential_set(const std::vector<MoebiusElement>& elements, const SurfaceSignature& sig) {
  const int g = sig.genus;
  if (elements.size() != static_cast<std::size_t>(2 * g + sig.boundary()))
    throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(2 * g + sig.boundary()) + " elements");
  if (2 * g + sig.boundary() < 3) throw Error(ErrorCode::InvalidSignature, "sequential sets need three or more boundary curves after cutting handles");
  std::vector<MoebiusElement> reduced;
  for (int i = 0; i < g; ++i) {
    const MoebiusElement& a = elements[2 * i];
    const MoebiusElement& b = elements[2 * i + 1];
    if (!classify(a, ElementClass::Hyperbolic) || !classify(b, ElementClass::Hyperbolic)) return false;
    reduced.push_back(a);
    reduced.push_back(b * inverse(a) * inverse(b));
  }
  reduced.insert(reduced.end(), elements.begin() + 2 * g, elements.end());
  return is_genus_zero_set(reduced, 2 * g + sig.holes);
}

bool fg1_condition(double l1, double l2, double alpha, double beta) {
  const double k = (std::sqrt(l1) + std::sqrt(l2)) / (1 + std::sqrt(l1 * l2));
  return 0 < k * k * beta && k * k * beta <= alpha && alpha < beta && std::isfinite(beta);
}

bool fg2_condition(double l1, double l2, double alpha) {
  return l2 * alpha >= (std::sqrt(l1) + 1) / (std::sqrt(l1) - 1);
}

std::vector<SurfaceSignature> sequential_families() {
  return {{0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}, {1, 1, 0}, {1, 0, 1}};
}

SequentialSet build_sequential_set(const SurfaceSignature& sig, const std::vector<double>& params) {
  auto with_defaults = [&](std::vector<double> defaults) {
    if (params.empty()) return defaults;
    if (params.size() != defaults.size())
      throw Error(ErrorCode::LengthMismatch,
                  "family " + sig.to_string() + " takes " + std::to_string(defaults.size()) + " parameters");
    return params;
  };
  if (sig == SurfaceSignature{0, 3, 0} || sig == SurfaceSignature{0, 2, 1}) {
    const bool parabolic = sig.punctures == 1;
    const auto p = with_defaults(parabolic ? std::vector<double>{4, 4, 1} : std::vector<double>{4, 4, 0.8, 1});
    const double l1 = param(p, 0), l2 = param(p, 1), beta = param(p, parabolic ? 2 : 3);
    require_in(l1 > 1 && l2 > 1 && beta > 0 && std::isfinite(beta), "need l1, l2 > 1 and 0 < beta < inf");
    const double k = (std::sqrt(l1) + std::sqrt(l2)) / (1 + std::sqrt(l1 * l2));
    const double alpha = parabolic ? k * k * beta : param(p, 2);
    require_in(parabolic || (k * k * beta < alpha && alpha < beta), "need k^2 beta < alpha < beta");
    return genus_zero_family(sig, make_hyperbolic(kInfinity, 0, l1), make_hyperbolic(alpha, beta, l2));
  }
  if (sig == SurfaceSignature{0, 1, 2}) {
    const auto p = with_defaults({4, 1});
    const double l1 = param(p, 0), alpha = param(p, 1);
    require_in(l1 > 1 && alpha > 0 && std::isfinite(alpha), "need l1 > 1 and alpha > 0");
    const double l2 = (std::sqrt(l1) + 1) / ((std::sqrt(l1) - 1) * alpha);
    return genus_zero_family(sig, make_hyperbolic(kInfinity, 0, l1), make_parabolic(alpha, l2));
  }
  if (sig == SurfaceSignature{0, 0, 3}) {
    const auto p = with_defaults({1, 1});
    const double l1 = param(p, 0), alpha = param(p, 1);
    require_in(l1 > 0 && alpha > 0 && std::isfinite(l1) && std::isfinite(alpha), "need l1 > 0 and alpha > 0");
    return genus_zero_family(sig, make_parabolic(kInfinity, l1), make_parabolic(alpha, 4 / l1));
  }
  if (sig == SurfaceSignature{1, 1, 0}) {
    const auto p = with_defaults({9});
    require_in(param(p, 0) > kCriticalLambda && std::isfinite(param(p, 0)), "need lambda > 3 + 2 sqrt 2");
    return genus_one_family(sig, param(p, 0));
  }
  if (sig == SurfaceSignature{1, 0, 1}) {
    if (!params.empty())
      require_in(params.size() == 1 && std::abs(params[0] - kCriticalLambda) <= 1e-12, "lambda must be 3 + 2 sqrt 2");
    return genus_one_family(sig, kCriticalLambda);
  }
  throw Error(ErrorCode::InvalidSignature, "no built-in sequential family for " + sig.to_string());
}

LiftCheck check_lift_relation(const SequentialSet& set, const std::vector<long>& levels, int m) {
  const Modulus mod(m);
  if (levels.size() != set.elements.size())
    throw Error(ErrorCode::LengthMismatch, "one level per generator is required");
  const int g = set.sig.genus;
  std::vector<LiftedElement> lifts;
  for (std::size_t i = 0; i < levels.size(); ++i) lifts.push_back(lift(set.elements[i], levels[i]));

  LiftedElement acc = lift(MoebiusElement::identity(), 0);
  for (int i = 0; i < g; ++i) {
    const LiftedElement& a = lifts[2 * i];
    const LiftedElement& b = lifts[2 * i + 1];
    for (const LiftedElement& f : {a, b, lifted_inverse(a), lifted_inverse(b)}) acc = lifted_product(acc, f);
  }
  for (std::size_t i = 2 * g; i < lifts.size(); ++i) acc = lifted_product(acc, lifts[i]);

  if (acc.base.distance(MoebiusElement::identity()) > kIdentityTol)
    throw Error(ErrorCode::RelatorNotIdentity, "the relator does not evaluate to the identity");
  const double turns = acc.lifted_argument / (2 * kPi);
  if (std::abs(turns - std::round(turns)) > kWindingTol)
    throw Error(ErrorCode::WindingNotIntegral, "relator winding " + std::to_string(turns) + " is not integral");

  LiftCheck out;
  out.winding = std::lround(turns);
  out.winding_verdict = mod.reduce(out.winding) == 0;
  long sum = 0;
  for (std::size_t i = 2 * g; i < levels.size(); ++i) sum += levels[i];
  const long target = (2 - 2 * g) - set.sig.boundary();
  out.closed_form_verdict = mod.reduce(sum - target) == 0;
  return out;
}

}  // namespace mspin
