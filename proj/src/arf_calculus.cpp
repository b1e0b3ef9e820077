#include "mspin/arf_calculus.hpp"

#include <numeric>

namespace mspin {

std::string_view to_string(TwistKind kind) {
  switch (kind) {
    case TwistKind::T1a: return "T1a";
    case TwistKind::T1b: return "T1b";
    case TwistKind::T2: return "T2";
    case TwistKind::T3: return "T3";
    case TwistKind::T4: return "T4";
    case TwistKind::T5a: return "T5a";
    case TwistKind::T5b: return "T5b";
    case TwistKind::HoleSwap: return "HoleSwap";
    case TwistKind::PunctureSwap: return "PunctureSwap";
  }
  return "?";
}

std::string Twist::to_string() const {
  std::string s(mspin::to_string(kind));
  const std::string sgn = sign > 0 ? "+" : "-";
  switch (kind) {
    case TwistKind::T1a:
    case TwistKind::T1b:
    case TwistKind::T5b:
      return s + sgn + "(" + std::to_string(i) + ")";
    case TwistKind::T2:
      return s + sgn + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case TwistKind::T3:
      return s + sgn + "(c" + std::to_string(i) + ")";
    case TwistKind::T4:
      return s + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case TwistKind::T5a:
      return s + "(" + std::to_string(i) + ")";
    case TwistKind::HoleSwap:
    case TwistKind::PunctureSwap:
      return s + "(" + std::to_string(i) + "," + std::to_string(i + 1) + ")";
  }
  return s;
}

std::string to_string(const TwistWord& word) {
  std::string out;
  for (const auto& t : word) {
    if (!out.empty()) out += ' ';
    out += t.to_string();
  }
  return out;
}

namespace {

void check_sum(const SurfaceSignature& sig, Modulus m, const std::vector<Residue>& holes,
               const std::vector<Residue>& punctures) {
  if (sig.closed()) {
    if ((2 * sig.genus - 2) % m.value() != 0)
      throw Error(ErrorCode::ClosedSurfaceInadmissible,
                  "closed " + sig.to_string() + " carries no " + std::to_string(m.value()) + "-Arf function");
    return;
  }
  long long sum = std::accumulate(holes.begin(), holes.end(), 0LL);
  sum = std::accumulate(punctures.begin(), punctures.end(), sum);
  const Residue target = boundary_sum_target(sig, m);
  if (m.reduce(sum) != target)
    throw Error(ErrorCode::SumConstraintViolated, "boundary values sum to " + std::to_string(m.reduce(sum)) +
                                                      ", expected " + std::to_string(target));
}

std::vector<Residue> reduce_all(Modulus m, const std::vector<long long>& raw) {
  std::vector<Residue> out;
  out.reserve(raw.size());
  for (long long x : raw) out.push_back(m.reduce(x));
  return out;
}

void require_same_space(int m1, const SurfaceSignature& s1, int m2, const SurfaceSignature& s2) {
  if (m1 != m2 || s1 != s2)
    throw Error(ErrorCode::MismatchedSignature, "operands live on different (m, signature) pairs");
}

}  // namespace

ArfBasisValues new_arf(int m_raw, const SurfaceSignature& sig, std::vector<long long> alpha,
                       std::vector<long long> beta, std::vector<long long> holes,
                       std::vector<long long> punctures) {
  Modulus m(m_raw);
  require_valid(sig);
  const auto g = static_cast<std::size_t>(sig.genus);
  if (alpha.size() != g || beta.size() != g || holes.size() != static_cast<std::size_t>(sig.holes) ||
      punctures.size() != static_cast<std::size_t>(sig.punctures))
    throw Error(ErrorCode::LengthMismatch, "value lists do not match " + sig.to_string());
  ArfBasisValues out{m_raw, sig, reduce_all(m, alpha), reduce_all(m, beta), reduce_all(m, holes),
                     reduce_all(m, punctures)};
  check_sum(sig, m, out.holes, out.punctures);
  return out;
}

ArfBasisValues new_arf(int m, const SurfaceSignature& sig, const std::vector<long long>& flat) {
  const auto g = static_cast<std::size_t>(sig.genus);
  if (flat.size() != 2 * g + static_cast<std::size_t>(sig.boundary()))
    throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(2 * g + sig.boundary()) + " values for " +
                                               sig.to_string() + ", got " + std::to_string(flat.size()));
  std::vector<long long> alpha, beta;
  for (std::size_t i = 0; i < g; ++i) {
    alpha.push_back(flat[2 * i]);
    beta.push_back(flat[2 * i + 1]);
  }
  auto it = flat.begin() + static_cast<std::ptrdiff_t>(2 * g);
  std::vector<long long> holes(it, it + sig.holes);
  std::vector<long long> punctures(it + sig.holes, flat.end());
  return new_arf(m, sig, std::move(alpha), std::move(beta), std::move(holes), std::move(punctures));
}

void for_each_arf(int m_raw, const SurfaceSignature& sig, const std::function<void(const ArfBasisValues&)>& visit) {
  Modulus m(m_raw);
  if (arf_count(sig, m) == 0) return;
  const int g = sig.genus;
  const int len = 2 * g + sig.boundary();
  // Every coordinate is free except the last boundary value, which the sum
  // constraint determines. Odometer over the free prefix in lex order.
  const int free_len = sig.closed() ? len : len - 1;
  std::vector<Residue> flat(static_cast<std::size_t>(len), 0);
  ArfBasisValues v{m_raw, sig, std::vector<Residue>(g), std::vector<Residue>(g),
                   std::vector<Residue>(sig.holes), std::vector<Residue>(sig.punctures)};
  const Residue target = sig.closed() ? 0 : boundary_sum_target(sig, m);
  while (true) {
    if (!sig.closed()) {
      long long partial = 0;
      for (int k = 2 * g; k < len - 1; ++k) partial += flat[k];
      flat[len - 1] = m.reduce(target - partial);
    }
    for (int i = 0; i < g; ++i) {
      v.alpha[i] = flat[2 * i];
      v.beta[i] = flat[2 * i + 1];
    }
    for (int k = 0; k < sig.holes; ++k) v.holes[k] = flat[2 * g + k];
    for (int k = 0; k < sig.punctures; ++k) v.punctures[k] = flat[2 * g + sig.holes + k];
    visit(v);
    int pos = free_len - 1;
    while (pos >= 0 && flat[pos] == m_raw - 1) flat[pos--] = 0;
    if (pos < 0) break;
    ++flat[pos];
  }
}

std::vector<ArfBasisValues> enumerate_arfs(int m, const SurfaceSignature& sig) {
  std::vector<ArfBasisValues> out;
  for_each_arf(m, sig, [&](const ArfBasisValues& v) { out.push_back(v); });
  return out;
}

std::vector<Twist> twist_generators(const SurfaceSignature& sig, int m) {
  (void)Modulus(m);
  require_valid(sig);
  std::vector<Twist> gens;
  const int g = sig.genus;
  for (int i = 1; i <= g; ++i)
    for (int s : {+1, -1}) {
      gens.push_back({TwistKind::T1a, i, 0, s});
      gens.push_back({TwistKind::T1b, i, 0, s});
    }
  for (int i = 1; i <= g; ++i)
    for (int j = i + 1; j <= g; ++j)
      for (int s : {+1, -1}) gens.push_back({TwistKind::T2, i, j, s});
  if (g >= 1) {
    // The twist reads the first boundary value of a block; block permutations
    // bring any value of that block into first position.
    if (sig.holes > 0)
      for (int s : {+1, -1}) gens.push_back({TwistKind::T3, 1, 0, s});
    if (sig.punctures > 0)
      for (int s : {+1, -1}) gens.push_back({TwistKind::T3, sig.holes + 1, 0, s});
  }
  for (int i = 1; i <= g; ++i)
    for (int j = i + 1; j <= g; ++j) gens.push_back({TwistKind::T4, i, j, +1});
  for (int i = 1; i <= g; ++i) {
    gens.push_back({TwistKind::T5a, i, 0, +1});
    for (int s : {+1, -1}) gens.push_back({TwistKind::T5b, i, 0, s});
  }
  for (int k = 1; k < sig.holes; ++k) gens.push_back({TwistKind::HoleSwap, k, 0, +1});
  for (int k = 1; k < sig.punctures; ++k) gens.push_back({TwistKind::PunctureSwap, k, 0, +1});
  return gens;
}

void check_twist(const SurfaceSignature& sig, const Twist& t) {
  const int g = sig.genus;
  auto handle_ok = [g](int i) { return i >= 1 && i <= g; };
  bool ok = t.sign == 1 || t.sign == -1;
  switch (t.kind) {
    case TwistKind::T1a:
    case TwistKind::T1b:
    case TwistKind::T5a:
    case TwistKind::T5b:
      ok = ok && handle_ok(t.i);
      break;
    case TwistKind::T2:
    case TwistKind::T4:
      ok = ok && handle_ok(t.i) && handle_ok(t.j) && t.i != t.j;
      break;
    case TwistKind::T3:
      ok = ok && g >= 1 && t.i >= 1 && t.i <= sig.boundary();
      break;
    case TwistKind::HoleSwap:
      ok = ok && t.i >= 1 && t.i < sig.holes;
      break;
    case TwistKind::PunctureSwap:
      ok = ok && t.i >= 1 && t.i < sig.punctures;
      break;
  }
  if (!ok) throw Error(ErrorCode::IndexOutOfRange, t.to_string() + " does not fit " + sig.to_string());
}

void apply_twist_flat(std::span<Residue> v, const SurfaceSignature& sig, Modulus m, const Twist& t) {
  const int g = sig.genus;
  auto a = [&](int i) -> Residue& { return v[2 * (i - 1)]; };
  auto b = [&](int i) -> Residue& { return v[2 * (i - 1) + 1]; };
  switch (t.kind) {
    case TwistKind::T1a:
      a(t.i) = m.reduce(a(t.i) + static_cast<long long>(t.sign) * b(t.i));
      break;
    case TwistKind::T1b:
      b(t.i) = m.reduce(b(t.i) + static_cast<long long>(t.sign) * a(t.i));
      break;
    case TwistKind::T2: {
      const long long ai = a(t.i), aj = a(t.j);
      b(t.i) = m.reduce(b(t.i) - t.sign * (ai + aj + 1));
      b(t.j) = m.reduce(b(t.j) - t.sign * (ai + aj + 1));
      break;
    }
    case TwistKind::T3: {
      const long long gamma = v[2 * g + t.i - 1];
      const long long ag = a(g), bg = b(g);
      if (t.sign > 0) {
        a(g) = m.reduce(-bg);
        b(g) = m.reduce(ag - gamma - 1);
      } else {
        a(g) = m.reduce(bg + gamma + 1);
        b(g) = m.reduce(-ag);
      }
      break;
    }
    case TwistKind::T4:
      std::swap(a(t.i), a(t.j));
      std::swap(b(t.i), b(t.j));
      break;
    case TwistKind::T5a:
      a(t.i) = m.reduce(-static_cast<long long>(a(t.i)));
      b(t.i) = m.reduce(-static_cast<long long>(b(t.i)));
      break;
    case TwistKind::T5b: {
      const long long ai = a(t.i), bi = b(t.i);
      if (t.sign > 0) {
        a(t.i) = m.reduce(-bi);
        b(t.i) = m.reduce(ai);
      } else {
        a(t.i) = m.reduce(bi);
        b(t.i) = m.reduce(-ai);
      }
      break;
    }
    case TwistKind::HoleSwap:
      std::swap(v[2 * g + t.i - 1], v[2 * g + t.i]);
      break;
    case TwistKind::PunctureSwap:
      std::swap(v[2 * g + sig.holes + t.i - 1], v[2 * g + sig.holes + t.i]);
      break;
  }
}

ArfBasisValues apply_twist(const ArfBasisValues& arf, const Twist& twist) {
  check_twist(arf.sig, twist);
  auto flat = arf.flatten();
  apply_twist_flat(flat, arf.sig, Modulus(arf.m), twist);
  const int g = arf.sig.genus;
  ArfBasisValues out = arf;
  for (int i = 0; i < g; ++i) {
    out.alpha[i] = flat[2 * i];
    out.beta[i] = flat[2 * i + 1];
  }
  for (int k = 0; k < arf.sig.holes; ++k) out.holes[k] = flat[2 * g + k];
  for (int k = 0; k < arf.sig.punctures; ++k) out.punctures[k] = flat[2 * g + arf.sig.holes + k];
  return out;
}

ArfBasisValues apply_word(const ArfBasisValues& arf, const TwistWord& word) {
  ArfBasisValues out = arf;
  for (const auto& t : word) out = apply_twist(out, t);
  return out;
}

Twist invert_twist(const Twist& t) {
  switch (t.kind) {
    case TwistKind::T1a:
    case TwistKind::T1b:
    case TwistKind::T2:
    case TwistKind::T3:
    case TwistKind::T5b:
      return {t.kind, t.i, t.j, -t.sign};
    case TwistKind::T4:
    case TwistKind::T5a:
    case TwistKind::HoleSwap:
    case TwistKind::PunctureSwap:
      return t;
  }
  return t;
}

TwistWord invert_word(const TwistWord& word) {
  TwistWord out;
  out.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back(invert_twist(*it));
  return out;
}

ArfBasisValues add_functional(const ArfBasisValues& arf, const LinearFunctional& f) {
  require_same_space(arf.m, arf.sig, f.m, f.sig);
  validate_functional(f);
  Modulus m(arf.m);
  ArfBasisValues out = arf;
  for (std::size_t i = 0; i < out.alpha.size(); ++i) {
    out.alpha[i] = m.reduce(out.alpha[i] + f.on_a[i]);
    out.beta[i] = m.reduce(out.beta[i] + f.on_b[i]);
  }
  for (std::size_t k = 0; k < out.holes.size(); ++k) out.holes[k] = m.reduce(out.holes[k] + f.on_boundary[k]);
  for (std::size_t k = 0; k < out.punctures.size(); ++k)
    out.punctures[k] = m.reduce(out.punctures[k] + f.on_boundary[out.holes.size() + k]);
  return out;
}

LinearFunctional difference(const ArfBasisValues& lhs, const ArfBasisValues& rhs) {
  require_same_space(lhs.m, lhs.sig, rhs.m, rhs.sig);
  Modulus m(lhs.m);
  LinearFunctional f{lhs.m, lhs.sig, {}, {}, {}};
  for (std::size_t i = 0; i < lhs.alpha.size(); ++i) {
    f.on_a.push_back(m.reduce(lhs.alpha[i] - rhs.alpha[i]));
    f.on_b.push_back(m.reduce(lhs.beta[i] - rhs.beta[i]));
  }
  for (std::size_t k = 0; k < lhs.holes.size(); ++k) f.on_boundary.push_back(m.reduce(lhs.holes[k] - rhs.holes[k]));
  for (std::size_t k = 0; k < lhs.punctures.size(); ++k)
    f.on_boundary.push_back(m.reduce(lhs.punctures[k] - rhs.punctures[k]));
  return f;
}

}  // namespace mspin
