#include "mspin/core_types.hpp"

#include <limits>
#include <numeric>
#include <sstream>

namespace mspin {

Modulus::Modulus(int m) : m_(m) {
  if (m < 2) throw Error(ErrorCode::InvalidModulus, "m must be at least 2, got " + std::to_string(m));
}

std::string SurfaceSignature::to_string() const {
  return "(" + std::to_string(genus) + "," + std::to_string(holes) + "," + std::to_string(punctures) + ")";
}

bool validate_signature(const SurfaceSignature& sig) noexcept {
  if (sig.genus < 0 || sig.holes < 0 || sig.punctures < 0) return false;
  if (sig.closed()) return sig.genus >= 2;
  // Negative Euler characteristic; admits the thrice-punctured sphere.
  return 2 - 2 * sig.genus - sig.boundary() < 0;
}

void require_valid(const SurfaceSignature& sig) {
  if (!validate_signature(sig))
    throw Error(ErrorCode::InvalidSignature, "signature " + sig.to_string() + " is not of hyperbolic type");
}

int teich_dimension(const SurfaceSignature& sig) {
  require_valid(sig);
  return 6 * sig.genus + 3 * sig.holes + 2 * sig.punctures - 6;
}

Residue boundary_sum_target(const SurfaceSignature& sig, Modulus m) {
  if (sig.closed()) throw Error(ErrorCode::ClosedSurface, "no boundary values on " + sig.to_string());
  return m.reduce(2LL - 2LL * sig.genus - sig.boundary());
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base)
      throw Error(ErrorCode::StateSpaceTooLarge, "arf count overflows 64 bits");
    r *= base;
  }
  return r;
}

}  // namespace

std::uint64_t arf_count(const SurfaceSignature& sig, Modulus m) {
  require_valid(sig);
  const auto mm = static_cast<std::uint64_t>(m.value());
  if (!sig.closed()) return checked_pow(mm, 2 * sig.genus + sig.boundary() - 1);
  if ((2 * sig.genus - 2) % m.value() == 0) return checked_pow(mm, 2 * sig.genus);
  return 0;
}

std::vector<Residue> ArfBasisValues::flatten() const {
  std::vector<Residue> out;
  out.reserve(alpha.size() * 2 + holes.size() + punctures.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    out.push_back(alpha[i]);
    out.push_back(beta[i]);
  }
  out.insert(out.end(), holes.begin(), holes.end());
  out.insert(out.end(), punctures.begin(), punctures.end());
  return out;
}

std::strong_ordering operator<=>(const ArfBasisValues& a, const ArfBasisValues& b) {
  if (auto c = a.m <=> b.m; c != 0) return c;
  if (auto c = a.sig <=> b.sig; c != 0) return c;
  return a.flatten() <=> b.flatten();
}

std::string ArfType::to_string() const {
  std::ostringstream os;
  os << "(g=" << genus << ", delta=" << delta << ", n_h=[";
  for (std::size_t j = 0; j < n_h.size(); ++j) os << (j ? "," : "") << n_h[j];
  os << "], n_p=[";
  for (std::size_t j = 0; j < n_p.size(); ++j) os << (j ? "," : "") << n_p[j];
  os << "])";
  return os.str();
}

std::string format_tuple(std::span<const Residue> values) {
  std::string out;
  for (Residue r : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(r);
  }
  return out;
}

void validate_functional(const LinearFunctional& f) {
  Modulus m(f.m);
  const auto g = static_cast<std::size_t>(f.sig.genus);
  if (f.on_a.size() != g || f.on_b.size() != g ||
      f.on_boundary.size() != static_cast<std::size_t>(f.sig.boundary()))
    throw Error(ErrorCode::LengthMismatch, "functional value lists do not match " + f.sig.to_string());
  auto in_range = [&](Residue r) { return r >= 0 && r < f.m; };
  for (const auto* v : {&f.on_a, &f.on_b, &f.on_boundary})
    for (Residue r : *v)
      if (!in_range(r)) throw Error(ErrorCode::IndexOutOfRange, "functional value outside [0, m)");
  long long sum = std::accumulate(f.on_boundary.begin(), f.on_boundary.end(), 0LL);
  if (m.reduce(sum) != 0)
    throw Error(ErrorCode::SumConstraintViolated, "boundary values of a functional must sum to 0");
}

}  // namespace mspin
