#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mspin/arf_calculus.hpp"
#include "mspin/core_types.hpp"

namespace mspin {

struct OrbitOptions {
  /// Largest admissible number of Arf functions on the signature.
  std::uint64_t cap = 10'000'000;
  /// Generator kinds removed from the action (ablation experiments).
  std::vector<TwistKind> excluded;
};

/// All members of the orbit of `arf`, sorted; the first is the canonical
/// representative.
std::vector<ArfBasisValues> orbit_of(const ArfBasisValues& arf, const OrbitOptions& options = {});

struct OrbitSummary {
  ArfType type;
  std::uint64_t size = 0;
  ArfBasisValues representative;

  friend bool operator==(const OrbitSummary&, const OrbitSummary&) = default;
};

struct CensusChecks {
  bool partition = true;
  bool soundness = true;
  bool completeness = true;

  bool all() const noexcept { return partition && soundness && completeness; }

  friend bool operator==(const CensusChecks&, const CensusChecks&) = default;
};

struct CensusReport {
  SurfaceSignature sig;
  int m = 2;
  std::uint64_t total = 0;
  /// Sorted by representative.
  std::vector<OrbitSummary> orbits;
  CensusChecks checks;
  /// Human-readable descriptions of failed checks.
  std::vector<std::string> diagnostics;

  friend bool operator==(const CensusReport& a, const CensusReport& b) {
    return a.sig == b.sig && a.m == b.m && a.total == b.total && a.orbits == b.orbits && a.checks == b.checks;
  }
};

CensusReport component_census(const SurfaceSignature& sig, int m, const OrbitOptions& options = {});

struct Verification {
  bool ok = false;
  std::vector<std::string> diagnostics;
};

/// Orbits <-> realisable types bijectively, with type constant on orbits.
Verification verify_classification(const SurfaceSignature& sig, int m, const OrbitOptions& options = {});

/// Recomputes the three checks of a report from its orbit rows alone.
CensusChecks recheck_rows(const SurfaceSignature& sig, int m, const std::vector<OrbitSummary>& orbits);

}  // namespace mspin
