#include "mspin/invariants.hpp"

#include <algorithm>
#include <numeric>

namespace mspin {

int arf_invariant_delta(const ArfBasisValues& arf) {
  const int m = arf.m;
  const int g = arf.sig.genus;
  if (g == 0) return 0;
  if (g == 1) {
    int d = m;
    d = std::gcd(d, arf.alpha[0]);
    d = std::gcd(d, arf.beta[0]);
    for (Residue c : arf.holes) d = std::gcd(d, (c + 1) % m);
    for (Residue c : arf.punctures) d = std::gcd(d, (c + 1) % m);
    return d;
  }
  if (m % 2 != 0) return 0;
  auto even = [](Residue r) { return r % 2 == 0; };
  if (std::any_of(arf.holes.begin(), arf.holes.end(), even) ||
      std::any_of(arf.punctures.begin(), arf.punctures.end(), even))
    return 0;
  int parity = 0;
  for (int i = 0; i < g; ++i) parity += (1 - arf.alpha[i]) * (1 - arf.beta[i]);
  return ((parity % 2) + 2) % 2;
}

ArfType type_of(const ArfBasisValues& arf) {
  ArfType t{arf.sig.genus, arf_invariant_delta(arf), std::vector<int>(arf.m, 0), std::vector<int>(arf.m, 0)};
  for (Residue c : arf.holes) ++t.n_h[c];
  for (Residue c : arf.punctures) ++t.n_p[c];
  return t;
}

bool is_realizable_type(const ArfType& ty, const SurfaceSignature& sig, int m_raw) {
  Modulus m(m_raw);
  const int g = sig.genus;
  if (ty.genus != g) return false;
  if (ty.n_h.size() != static_cast<std::size_t>(m_raw) || ty.n_p.size() != static_cast<std::size_t>(m_raw)) return false;
  if (std::any_of(ty.n_h.begin(), ty.n_h.end(), [](int c) { return c < 0; }) ||
      std::any_of(ty.n_p.begin(), ty.n_p.end(), [](int c) { return c < 0; }))
    return false;
  if (std::accumulate(ty.n_h.begin(), ty.n_h.end(), 0) != sig.holes) return false;
  if (std::accumulate(ty.n_p.begin(), ty.n_p.end(), 0) != sig.punctures) return false;

  auto present = [&](int j) { return ty.n_h[j] + ty.n_p[j] != 0; };

  if (g == 0) {
    if (ty.delta != 0) return false;
  } else if (g == 1) {
    // gcd over the occupied values j + 1, taken in {1..m}; empty set -> m.
    int d = m_raw;
    for (int j = 0; j < m_raw; ++j)
      if (present(j)) d = std::gcd(d, j + 1);
    if (ty.delta < 1 || m_raw % ty.delta != 0 || d % ty.delta != 0) return false;
  } else {
    if (ty.delta != 0 && ty.delta != 1) return false;
    if (m_raw % 2 != 0 && ty.delta != 0) return false;
    if (m_raw % 2 == 0) {
      bool even_present = false;
      for (int j = 0; j < m_raw; j += 2) even_present = even_present || present(j);
      if (even_present && ty.delta != 0) return false;
    }
  }

  long long degree = 0;
  for (int j = 0; j < m_raw; ++j) degree += static_cast<long long>(j) * (ty.n_h[j] + ty.n_p[j]);
  return m.reduce(degree) == m.reduce(2LL - 2LL * g - sig.boundary());
}

namespace {

// All count vectors of length `parts` summing to `total`, in lex order.
void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = 0; k <= total; ++k) {
    cur.push_back(k);
    compositions(total - k, parts, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  compositions(total, parts, cur, out);
  return out;
}

}  // namespace

std::vector<ArfType> enumerate_realizable_types(const SurfaceSignature& sig, int m) {
  (void)Modulus(m);
  require_valid(sig);
  std::vector<int> deltas;
  if (sig.genus == 0) {
    deltas = {0};
  } else if (sig.genus == 1) {
    for (int d = 1; d <= m; ++d) deltas.push_back(d);
  } else {
    deltas = {0, 1};
  }
  const auto hole_counts = compositions(sig.holes, m);
  const auto puncture_counts = compositions(sig.punctures, m);
  std::vector<ArfType> out;
  for (int d : deltas)
    for (const auto& nh : hole_counts)
      for (const auto& np : puncture_counts) {
        ArfType t{sig.genus, d, nh, np};
        if (is_realizable_type(t, sig, m)) out.push_back(std::move(t));
      }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Runs the reduction on a flattened tuple, recording every twist applied.
class Normalizer {
 public:
  explicit Normalizer(const ArfBasisValues& arf)
      : sig_(arf.sig), m_(arf.m), values_(arf.flatten()), g_(arf.sig.genus) {}

  NormalForm run(const ArfBasisValues& input) {
    if (g_ > 1) reduce_higher_genus();
    if (g_ == 1) reduce_genus_one();
    sort_blocks();
    ArfBasisValues out = input;
    for (int i = 0; i < g_; ++i) {
      out.alpha[i] = values_[2 * i];
      out.beta[i] = values_[2 * i + 1];
    }
    for (int k = 0; k < sig_.holes; ++k) out.holes[k] = values_[2 * g_ + k];
    for (int k = 0; k < sig_.punctures; ++k) out.punctures[k] = values_[2 * g_ + sig_.holes + k];
    return {std::move(out), std::move(word_)};
  }

 private:
  Residue& alpha(int i) { return values_[2 * (i - 1)]; }
  Residue& beta(int i) { return values_[2 * (i - 1) + 1]; }
  Residue boundary(int pos) const { return values_[2 * g_ + pos - 1]; }

  void push(Twist t) {
    apply_twist_flat(values_, sig_, m_, t);
    word_.push_back(t);
  }

  // beta_i -> beta_i - 2 via T2, T5a(j), T2, T5a(j); needs alpha_i = alpha_j = 0.
  void beta_minus_two(int i) {
    const int j = i == 1 ? 2 : 1;
    const int lo = std::min(i, j), hi = std::max(i, j);
    push({TwistKind::T2, lo, hi, +1});
    push({TwistKind::T5a, j, 0, +1});
    push({TwistKind::T2, lo, hi, +1});
    push({TwistKind::T5a, j, 0, +1});
  }

  void beta_to_bit(int i) {
    const int steps = beta(i) / 2;
    for (int k = 0; k < steps; ++k) beta_minus_two(i);
  }

  // (a, b) -> (0, d) with d = gcd(a, b) on integer representatives.
  void clear_alpha(int i) {
    euclid_handle(i);
    if (alpha(i) != 0) push({TwistKind::T5b, i, 0, +1});  // (d, 0) -> (0, d)
  }

  void reduce_higher_genus() {
    for (int i = 1; i <= g_; ++i) clear_alpha(i);
    // All alpha are 0 from here until the final T1a moves.
    const int m = m_.value();
    if (m % 2 != 0) {
      for (int i = 1; i <= g_; ++i) {
        const int steps = static_cast<int>(m_.reduce(static_cast<long long>(beta(i) - 1) * ((m + 1) / 2)));
        for (int k = 0; k < steps; ++k) beta_minus_two(i);
      }
    } else {
      for (int i = 1; i <= g_; ++i) beta_to_bit(i);
      if (count_zero_handles() % 2 == 1) lift_zero_handle();
    }
    // Pair up (0,0) handles: inverse T2 sends (0,0,0,0) to (0,1,0,1).
    std::vector<int> zeros;
    for (int i = 1; i <= g_; ++i)
      if (beta(i) == 0) zeros.push_back(i);
    for (std::size_t k = 0; k + 1 < zeros.size(); k += 2) push({TwistKind::T2, zeros[k], zeros[k + 1], -1});
    if (zeros.size() % 2 == 1 && zeros.back() != 1) push({TwistKind::T4, 1, zeros.back(), +1});
    for (int i = 2; i <= g_; ++i) push({TwistKind::T1a, i, 0, +1});  // (0,1) -> (1,1)
  }

  int count_zero_handles() {
    int z = 0;
    for (int i = 1; i <= g_; ++i) z += beta(i) == 0;
    return z;
  }

  // With an even boundary value, T3 turns a (0,0) handle into (0, odd).
  void lift_zero_handle() {
    const int even_pos = find_even_boundary();
    if (even_pos == 0) return;
    int z = g_;
    while (beta(z) != 0) --z;
    if (z != g_) push({TwistKind::T4, z, g_, +1});
    const int t3_pos = bring_to_block_front(even_pos);
    push({TwistKind::T3, t3_pos, 0, +1});  // (0,0) -> (0, -gamma - 1)
    beta_to_bit(g_);
  }

  int find_even_boundary() const {
    for (int pos = 1; pos <= sig_.boundary(); ++pos)
      if (boundary(pos) % 2 == 0) return pos;
    return 0;
  }

  // Moves boundary value at combined position `pos` to the front of its
  // block with adjacent swaps; returns the new position.
  int bring_to_block_front(int pos) {
    if (pos <= sig_.holes) {
      for (int k = pos - 1; k >= 1; --k) push({TwistKind::HoleSwap, k, 0, +1});
      return 1;
    }
    for (int k = pos - sig_.holes - 1; k >= 1; --k) push({TwistKind::PunctureSwap, k, 0, +1});
    return sig_.holes + 1;
  }

  // Euclid with T1a- / T1b- on integer representatives; finishes at (d, 0).
  void euclid_handle(int i) {
    while (alpha(i) != 0 && beta(i) != 0) {
      if (alpha(i) >= beta(i)) {
        const int q = alpha(i) / beta(i);
        for (int k = 0; k < q; ++k) push({TwistKind::T1a, i, 0, -1});
      } else {
        const int q = beta(i) / alpha(i);
        for (int k = 0; k < q; ++k) push({TwistKind::T1b, i, 0, -1});
      }
    }
    if (alpha(i) == 0 && beta(i) != 0) push({TwistKind::T5b, i, 0, -1});  // (0, y) -> (y, 0)
  }

  void euclid_handle_one() { euclid_handle(1); }

  // (d, 0) -> (gcd(d, m), 0), treating the zero residue of beta as m.
  void absorb_modulus() {
    if (alpha(1) == 0 || m_.value() % alpha(1) == 0) return;
    const int q = m_.value() / alpha(1);
    for (int k = 0; k < q; ++k) push({TwistKind::T1b, 1, 0, -1});
    euclid_handle_one();
  }

  void reduce_genus_one() {
    euclid_handle_one();
    absorb_modulus();
    // Fold every gamma + 1 into the gcd: (d,0) -T5b+-> (0,d) -T3-> (-d, -(gamma+1)).
    for (int pos = 1; pos <= sig_.boundary(); ++pos) {
      const int front = bring_to_block_front(pos);
      if (alpha(1) == 0 && beta(1) == 0) {
        push({TwistKind::T3, front, 0, +1});  // (0,0) -> (0, -(gamma+1))
      } else {
        push({TwistKind::T5b, 1, 0, +1});
        push({TwistKind::T3, front, 0, +1});
      }
      euclid_handle_one();
      absorb_modulus();
    }
  }

  void sort_blocks() {
    auto bubble = [&](int offset, int len, TwistKind kind) {
      for (int pass = 0; pass < len; ++pass)
        for (int k = 1; k < len; ++k)
          if (values_[offset + k - 1] > values_[offset + k]) push({kind, k, 0, +1});
    };
    bubble(2 * g_, sig_.holes, TwistKind::HoleSwap);
    bubble(2 * g_ + sig_.holes, sig_.punctures, TwistKind::PunctureSwap);
  }

  SurfaceSignature sig_;
  Modulus m_;
  std::vector<Residue> values_;
  int g_;
  TwistWord word_;
};

}  // namespace

NormalForm normalize(const ArfBasisValues& arf) {
  return Normalizer(arf).run(arf);
}

bool is_normal_form(const ArfBasisValues& arf) {
  const int g = arf.sig.genus;
  if (!std::is_sorted(arf.holes.begin(), arf.holes.end()) ||
      !std::is_sorted(arf.punctures.begin(), arf.punctures.end()))
    return false;
  const int delta = arf_invariant_delta(arf);
  if (g == 1) return arf.alpha[0] == delta % arf.m && arf.beta[0] == 0;
  if (g > 1) {
    if (arf.alpha[0] != 0 || arf.beta[0] != 1 - delta) return false;
    for (int i = 1; i < g; ++i)
      if (arf.alpha[i] != 1 || arf.beta[i] != 1) return false;
  }
  return true;
}

}  // namespace mspin
