#pragma once

// Test-only reference routines. None of these call into the library's
// realization or oracle code paths; they exist to check them.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "cyclic/cycle.hpp"

namespace cyclic::testing {

/// Every q-cycle, found by filtering all permutations of {1..q}.
inline std::vector<Cycle> cycles_by_filter(int q) {
  std::vector<int> images(q);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Cycle> out;
  do {
    int x = 1, len = 0;
    do {
      x = images[x - 1];
      ++len;
    } while (x != 1);
    if (len == q) out.push_back(Cycle::from_one_line(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

/// Exact-period-q orbits of m_k as sorted numerators over k^q - 1, found with
/// a visited bitmap.
inline std::vector<std::vector<std::uint64_t>> orbits_by_bitmap(int q, int k) {
  std::uint64_t modulus = 1;
  for (int i = 0; i < q; ++i) modulus *= static_cast<std::uint64_t>(k);
  modulus -= 1;
  std::vector<bool> seen(modulus, false);
  std::vector<std::vector<std::uint64_t>> out;
  for (std::uint64_t a = 1; a < modulus; ++a) {
    if (seen[a]) continue;
    std::vector<std::uint64_t> orbit;
    std::uint64_t x = a;
    do {
      seen[x] = true;
      orbit.push_back(x);
      x = x * k % modulus;
    } while (x != a);
    if (static_cast<int>(orbit.size()) == q) {
      std::sort(orbit.begin(), orbit.end());
      out.push_back(std::move(orbit));
    }
  }
  return out;
}

/// Number of (n, shift) pairs obtained by testing every vector in
/// {0..k-1}^q against the admissibility rules, weighting each by n_q.
inline long count_admissible_brute(const std::vector<int>& sig, int k) {
  const int q = static_cast<int>(sig.size());
  std::vector<int> n(q, 0);
  long total = 0;
  while (true) {
    int sum = std::accumulate(n.begin(), n.end(), 0);
    bool ok = sum == k - 1 && n[q - 1] >= 1;
    for (int i = 0; ok && i < q; ++i) ok = n[i] >= sig[i];
    if (ok) total += n[q - 1];
    int i = 0;
    while (i < q && n[i] == k - 1) n[i++] = 0;
    if (i == q) break;
    ++n[i];
  }
  return total;
}

/// The (p-1)-cycle i -> d*i (mod p).
inline Cycle multiplication_cycle(int p, int d) {
  std::vector<int> images(p - 1);
  for (int i = 1; i < p; ++i) images[i - 1] = (d * i) % p;
  return Cycle::from_one_line(images);
}

inline bool is_primitive_root(int d, int p) {
  int x = 1;
  for (int e = 1; e < p - 1; ++e) {
    x = x * d % p;
    if (x == 1) return false;
  }
  return true;
}

}  // namespace cyclic::testing
