#pragma once

// Independent reference computations used by the tests.

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "mspin/core_types.hpp"

namespace oracle {

inline long long mod(long long x, int m) { return ((x % m) + m) % m; }

/// Every residue tuple of length 2g + l_h + l_p in lexicographic order,
/// filtered by the boundary-sum rule.
inline std::vector<std::vector<int>> brute_force_arfs(int m, const mspin::SurfaceSignature& sig) {
  const int len = 2 * sig.genus + sig.holes + sig.punctures;
  const int boundary = sig.holes + sig.punctures;
  std::vector<std::vector<int>> out;
  std::vector<int> t(len, 0);
  while (true) {
    bool keep;
    if (boundary == 0) {
      keep = mod(2 - 2 * sig.genus, m) == 0;
    } else {
      long long s = 0;
      for (int i = 2 * sig.genus; i < len; ++i) s += t[i];
      keep = mod(s, m) == mod((2 - 2 * sig.genus) - boundary, m);
    }
    if (keep) out.push_back(t);
    int k = len - 1;
    while (k >= 0 && ++t[k] == m) t[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

inline std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// gcd(m, alpha, beta, gamma_i + 1) for a genus-one tuple.
inline int genus_one_gcd(int m, const std::vector<int>& flat) {
  int d = m;
  for (std::size_t i = 0; i < flat.size(); ++i) d = std::gcd(d, i < 2 ? flat[i] : flat[i] + 1);
  return d;
}

}  // namespace oracle
