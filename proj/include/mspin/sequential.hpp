#pragma once

#include <vector>

#include "mspin/core_types.hpp"
#include "mspin/moebius.hpp"

namespace mspin {

/// Generators (A_1, B_1, ..., A_g, B_g, C_{g+1}, ..., C_n).
struct SequentialSet {
  SurfaceSignature sig;
  std::vector<MoebiusElement> elements;
};

/// Checks the defining conditions. Holes are hyperbolic, punctures
/// parabolic. Genus sets reduce to (A_1, B_1 A_1^-1 B_1^-1, ..., C...);
/// long sets check every triple (C_1...C_{j-1}, C_j, C_{j+1}...C_n).
/// DegenerateElement when an element sits on the classification band.
bool is_sequential_set(const std::vector<MoebiusElement>& elements, const SurfaceSignature& sig);

/// Lemma FG1: (tau_{inf,0}(l1), tau_{alpha,beta}(l2), (C1 C2)^-1) is
/// sequential iff 0 < k^2 beta <= alpha < beta, k = (sqrt l1 + sqrt l2)/(1 + sqrt(l1 l2)).
bool fg1_condition(double l1, double l2, double alpha, double beta);

/// Lemma FG2: (tau_{inf,0}(l1), pi_alpha(l2), (C1 C2)^-1) is sequential iff
/// l2 alpha >= (sqrt l1 + 1)/(sqrt l1 - 1).
bool fg2_condition(double l1, double l2, double alpha);

/// Built-in families:
///   (0,3,0) {l1, l2, alpha, beta}: tau_{inf,0}(l1), tau_{alpha,beta}(l2), (C1 C2)^-1
///   (0,2,1) {l1, l2, beta}: as above with alpha on the parabolic boundary
///   (0,1,2) {l1, alpha}: tau_{inf,0}(l1), pi_alpha(l2) with equality in FG2
///   (0,0,3) {l1, alpha}: pi_inf(l1), pi_alpha(4 / l1), (C1 C2)^-1
///   (1,1,0) {lambda > 3 + 2 sqrt 2}: tau_{inf,0}(lambda), tau_{-1,1}(lambda), [A,B]^-1
///   (1,0,1) {}: the same at lambda = 3 + 2 sqrt 2
/// Empty params select defaults.
SequentialSet build_sequential_set(const SurfaceSignature& sig, const std::vector<double>& params = {});

/// Signatures with a built-in family.
std::vector<SurfaceSignature> sequential_families();

struct LiftCheck {
  long winding = 0;
  /// Relator lifts to u^winding; it is trivial in G_m iff winding = 0 mod m.
  bool winding_verdict = false;
  /// sum lev(C_i) = (2 - 2g) - (n - g) mod m.
  bool closed_form_verdict = false;

  bool agree() const noexcept { return winding_verdict == closed_form_verdict; }
};

/// Chains lifted generators at the given levels through the relator
/// prod [A_i, B_i] prod C_i. RelatorNotIdentity if the base product is not
/// the identity to 1e-8; WindingNotIntegral if off an integer by > 0.01.
LiftCheck check_lift_relation(const SequentialSet& set, const std::vector<long>& levels, int m);

}  // namespace mspin
