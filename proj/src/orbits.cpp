#include "mspin/orbits.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

#include "mspin/invariants.hpp"

namespace mspin {

namespace {

class StateCodec {
 public:
  StateCodec(const SurfaceSignature& sig, int m) : sig_(sig), m_(m), len_(2 * sig.genus + sig.boundary()) {}

  std::uint64_t encode(std::span<const Residue> v) const {
    std::uint64_t idx = 0;
    for (Residue r : v) idx = idx * static_cast<std::uint64_t>(m_) + static_cast<std::uint64_t>(r);
    return idx;
  }

  void decode(std::uint64_t idx, std::span<Residue> v) const {
    for (int k = len_ - 1; k >= 0; --k) {
      v[k] = static_cast<Residue>(idx % static_cast<std::uint64_t>(m_));
      idx /= static_cast<std::uint64_t>(m_);
    }
  }

  ArfBasisValues to_values(std::span<const Residue> v) const {
    const int g = sig_.genus;
    ArfBasisValues out{m_, sig_, {}, {}, {}, {}};
    for (int i = 0; i < g; ++i) {
      out.alpha.push_back(v[2 * i]);
      out.beta.push_back(v[2 * i + 1]);
    }
    out.holes.assign(v.begin() + 2 * g, v.begin() + 2 * g + sig_.holes);
    out.punctures.assign(v.begin() + 2 * g + sig_.holes, v.end());
    return out;
  }

  int length() const { return len_; }

 private:
  SurfaceSignature sig_;
  int m_;
  int len_;
};

std::vector<Twist> active_generators(const SurfaceSignature& sig, int m, const OrbitOptions& options) {
  auto gens = twist_generators(sig, m);
  std::erase_if(gens, [&](const Twist& t) {
    return std::find(options.excluded.begin(), options.excluded.end(), t.kind) != options.excluded.end();
  });
  return gens;
}

void check_cap(const SurfaceSignature& sig, int m, const OrbitOptions& options) {
  const auto count = arf_count(sig, Modulus(m));
  if (count > options.cap)
    throw Error(ErrorCode::StateSpaceTooLarge, std::to_string(count) + " Arf functions on " + sig.to_string() +
                                                   " exceed the cap of " + std::to_string(options.cap));
}

bool satisfies_sum(std::span<const Residue> v, const SurfaceSignature& sig, Modulus m) {
  if (sig.closed()) return true;
  long long sum = 0;
  for (std::size_t k = 2 * static_cast<std::size_t>(sig.genus); k < v.size(); ++k) sum += v[k];
  return m.reduce(sum) == boundary_sum_target(sig, m);
}

// Breadth-first closure from `start`; `seen` is updated with every member.
template <typename Seen>
std::vector<std::uint64_t> bfs(std::uint64_t start, const StateCodec& codec, const SurfaceSignature& sig, Modulus m,
                               const std::vector<Twist>& gens, Seen& seen, bool& closed_under_sum) {
  std::vector<std::uint64_t> members{start};
  std::deque<std::uint64_t> frontier{start};
  seen.mark(start);
  std::vector<Residue> cur(static_cast<std::size_t>(codec.length()));
  std::vector<Residue> next(cur.size());
  while (!frontier.empty()) {
    const auto idx = frontier.front();
    frontier.pop_front();
    codec.decode(idx, cur);
    for (const auto& t : gens) {
      next = cur;
      apply_twist_flat(next, sig, m, t);
      const auto nidx = codec.encode(next);
      if (seen.contains(nidx)) continue;
      if (!satisfies_sum(next, sig, m)) closed_under_sum = false;
      seen.mark(nidx);
      members.push_back(nidx);
      frontier.push_back(nidx);
    }
  }
  return members;
}

struct HashSeen {
  std::unordered_set<std::uint64_t> set;
  bool contains(std::uint64_t i) const { return set.count(i) != 0; }
  void mark(std::uint64_t i) { set.insert(i); }
};

struct BitmapSeen {
  std::vector<bool> bits;
  bool contains(std::uint64_t i) const { return bits[i]; }
  void mark(std::uint64_t i) { bits[i] = true; }
};

}  // namespace

std::vector<ArfBasisValues> orbit_of(const ArfBasisValues& arf, const OrbitOptions& options) {
  check_cap(arf.sig, arf.m, options);
  const StateCodec codec(arf.sig, arf.m);
  const auto gens = active_generators(arf.sig, arf.m, options);
  HashSeen seen;
  bool closed = true;
  const auto flat = arf.flatten();
  auto members = bfs(codec.encode(flat), codec, arf.sig, Modulus(arf.m), gens, seen, closed);
  std::sort(members.begin(), members.end());
  std::vector<ArfBasisValues> out;
  out.reserve(members.size());
  std::vector<Residue> buf(flat.size());
  for (auto idx : members) {
    codec.decode(idx, buf);
    out.push_back(codec.to_values(buf));
  }
  return out;
}

CensusReport component_census(const SurfaceSignature& sig, int m_raw, const OrbitOptions& options) {
  const Modulus m(m_raw);
  check_cap(sig, m_raw, options);
  CensusReport report{sig, m_raw, 0, {}, {}, {}};
  const StateCodec codec(sig, m_raw);
  const auto gens = active_generators(sig, m_raw, options);

  std::uint64_t space = 1;
  for (int k = 0; k < codec.length(); ++k) space *= static_cast<std::uint64_t>(m_raw);
  BitmapSeen seen{std::vector<bool>(space, false)};

  bool closed = true;
  std::uint64_t covered = 0;
  std::vector<Residue> buf(static_cast<std::size_t>(codec.length()));
  for_each_arf(m_raw, sig, [&](const ArfBasisValues& v) {
    ++report.total;
    const auto flat = v.flatten();
    const auto start = codec.encode(flat);
    if (seen.contains(start)) return;
    // Lexicographic enumeration order makes the first unseen tuple the
    // minimum of its orbit.
    const auto members = bfs(start, codec, sig, m, gens, seen, closed);
    covered += members.size();
    OrbitSummary summary{type_of(v), members.size(), v};
    for (auto idx : members) {
      codec.decode(idx, buf);
      if (!satisfies_sum(buf, sig, m)) continue;
      if (type_of(codec.to_values(buf)) != summary.type) {
        if (report.checks.soundness)
          report.diagnostics.push_back("orbit of [" + format_tuple(flat) + "] with type " +
                                       summary.type.to_string() + " contains [" + format_tuple(buf) +
                                       "] of type " + type_of(codec.to_values(buf)).to_string());
        report.checks.soundness = false;
      }
    }
    report.orbits.push_back(std::move(summary));
  });

  if (!closed || covered != report.total) {
    report.checks.partition = false;
    report.diagnostics.push_back("orbits cover " + std::to_string(covered) + " states but the enumeration has " +
                                 std::to_string(report.total));
  }

  std::set<ArfType> orbit_types;
  for (const auto& o : report.orbits) {
    if (!orbit_types.insert(o.type).second) {
      report.checks.completeness = false;
      report.diagnostics.push_back("type " + o.type.to_string() + " labels more than one orbit");
    }
  }
  const auto realizable = enumerate_realizable_types(sig, m_raw);
  const std::set<ArfType> expected(realizable.begin(), realizable.end());
  if (orbit_types != expected) {
    report.checks.completeness = false;
    for (const auto& t : expected)
      if (!orbit_types.count(t)) report.diagnostics.push_back("realisable type " + t.to_string() + " has no orbit");
    for (const auto& t : orbit_types)
      if (!expected.count(t)) report.diagnostics.push_back("orbit type " + t.to_string() + " is not realisable");
  }
  return report;
}

Verification verify_classification(const SurfaceSignature& sig, int m, const OrbitOptions& options) {
  auto report = component_census(sig, m, options);
  Verification out{report.checks.all(), std::move(report.diagnostics)};
  if (out.ok) return out;
  // Name an explicit counterexample: two orbit representatives sharing a type.
  for (std::size_t i = 0; i < report.orbits.size(); ++i)
    for (std::size_t j = i + 1; j < report.orbits.size(); ++j)
      if (report.orbits[i].type == report.orbits[j].type) {
        out.diagnostics.push_back("counterexample: [" + format_tuple(report.orbits[i].representative.flatten()) +
                                  "] and [" + format_tuple(report.orbits[j].representative.flatten()) +
                                  "] share type " + report.orbits[i].type.to_string() +
                                  " but lie in different orbits");
        return out;
      }
  return out;
}

CensusChecks recheck_rows(const SurfaceSignature& sig, int m, const std::vector<OrbitSummary>& orbits) {
  CensusChecks checks;
  std::uint64_t total = 0;
  for (const auto& o : orbits) total += o.size;
  checks.partition = total == arf_count(sig, Modulus(m));
  std::set<ArfType> seen;
  for (const auto& o : orbits) {
    if (type_of(o.representative) != o.type) checks.soundness = false;
    if (!seen.insert(o.type).second) checks.completeness = false;
  }
  const auto realizable = enumerate_realizable_types(sig, m);
  if (seen != std::set<ArfType>(realizable.begin(), realizable.end())) checks.completeness = false;
  return checks;
}

}  // namespace mspin
