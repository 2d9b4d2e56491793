#include "cyclic/realization.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "cyclic/error.hpp"
#include "cyclic/spectral.hpp"

namespace cyclic {
namespace {

void require_degree(const Cycle& sigma, int k) {
  const int d = descent(sigma);
  if (k < std::max(d, 2))
    throw DegreeTooSmall("degree k = " + std::to_string(k) +
                         " is below max(descent, 2) = " +
                         std::to_string(std::max(d, 2)) + " for " +
                         sigma.to_string());
}

// Builds the orbit from an admissible (n, shift); admissibility is checked
// by the callers. Every produced point set is re-verified against sigma.
Orbit construct(const Cycle& sigma, int k, const FixVector& fix) {
  const int q = sigma.q();
  const Signature sig = signature(sigma);
  WindingVector p;
  p.p.resize(q);
  for (int i = 0; i < q; ++i) p.p[i] = fix.n[i] - sig.bits[i];

  const TransitionMatrix b = pair_matrix(sigma, p);
  if (b.column_sum != k)
    throw InvariantViolation("pair matrix column sum differs from k");
  const RationalVector l = stationary_vector(b);

  Rational head = 0;  // sum of l_j over j in [1, sigma(1))
  for (int j = 1; j < sigma(1); ++j) head += l[j - 1];
  RationalVector x(q);
  x[0] = (Rational(fix.shift) + head) / (k - 1);
  for (int i = 1; i < q; ++i) x[i] = x[i - 1] + l[i - 1];

  for (int i = 0; i < q; ++i) {
    if (x[i] <= 0 || x[i] >= 1)
      throw InvariantViolation("constructed point left (0, 1)");
  }
  for (int i = 1; i <= q; ++i) {
    if (frac(Rational(k) * x[i - 1]) != x[sigma(i) - 1])
      throw InvariantViolation("constructed orbit does not realize " +
                               sigma.to_string());
  }
  Orbit orbit = Orbit::from_points(k, x);
  if (measure_fix(orbit) != fix)
    throw InvariantViolation("constructed orbit has the wrong fixed point "
                             "distribution");
  return orbit;
}

}  // namespace

void check_fix_admissible(const Cycle& sigma, int k, const FixVector& fix) {
  require_degree(sigma, k);
  const int q = sigma.q();
  if (fix.q() != q)
    throw NotAdmissible(Clause::kLength, "expected " + std::to_string(q) +
                                             " components");
  for (int i = 0; i < q; ++i)
    if (fix.n[i] < 0)
      throw NotAdmissible(Clause::kNegative, "i = " + std::to_string(i + 1));
  if (fix.sum() != k - 1)
    throw NotAdmissible(Clause::kSum, "sum is " + std::to_string(fix.sum()));
  if (fix.n[q - 1] < 1) throw NotAdmissible(Clause::kLastPositive, "");
  const Signature sig = signature(sigma);
  for (int i = 0; i < q; ++i)
    if (fix.n[i] < sig.bits[i])
      throw NotAdmissible(Clause::kBelowSignature,
                          "i = " + std::to_string(i + 1));
  if (fix.shift < 0 || fix.shift >= fix.n[q - 1])
    throw ShiftOutOfRange("shift must satisfy 0 <= shift < n_q = " +
                          std::to_string(fix.n[q - 1]));
}

void check_dep_admissible(const Cycle& sigma, int k, const DepVector& w) {
  require_degree(sigma, k);
  const int q = sigma.q();
  if (static_cast<int>(w.w.size()) != k - 1)
    throw NotAdmissible(Clause::kLength,
                        "expected " + std::to_string(k - 1) + " components");
  for (std::size_t i = 0; i < w.w.size(); ++i) {
    if (w.w[i] < 0)
      throw NotAdmissible(Clause::kNegative, "i = " + std::to_string(i + 1));
    if (w.w[i] > q)
      throw NotAdmissible(Clause::kOutOfRange, "i = " + std::to_string(i + 1));
    if (i > 0 && w.w[i - 1] > w.w[i])
      throw NotAdmissible(Clause::kNotMonotone,
                          "at i = " + std::to_string(i + 1));
  }
  if (w.w.back() != q) throw NotAdmissible(Clause::kLastNotQ, "");
  for (int marked : signature(sigma).marked_indices()) {
    if (std::find(w.w.begin(), w.w.end(), marked) == w.w.end())
      throw NotAdmissible(Clause::kMissingMarked,
                          "index " + std::to_string(marked));
  }
}

Orbit realize_minimal(const Cycle& sigma) {
  const int d = descent(sigma);
  if (d == 1)
    throw RotationCycle(sigma.to_string() +
                        " is a rotation cycle; m_1 has no periodic orbits. "
                        "Pass a degree k >= 2 with a fix or dep vector");
  const Signature sig = signature(sigma);
  if (sig.last() != 1)
    throw NotRealizable(sigma.to_string() + " has signature " +
                        to_string(sig.bits) +
                        " ending in 0, so it has no realization under m_" +
                        std::to_string(d));
  return construct(sigma, d, FixVector{sig.bits, 0});
}

Orbit realize_general(const Cycle& sigma, int k, const FixVector& fix) {
  check_fix_admissible(sigma, k, fix);
  return construct(sigma, k, fix);
}

Orbit realize_from_dep(const Cycle& sigma, int k, const DepVector& w) {
  check_dep_admissible(sigma, k, w);
  return construct(sigma, k, dep_to_fix(w, sigma.q()));
}

DepVector fix_to_dep(const FixVector& fix, int k) {
  const int q = fix.q();
  if (q < 1) throw InvalidArgument("empty fix vector");
  for (int v : fix.n)
    if (v < 0) throw InvalidArgument("fix vector has a negative component");
  if (fix.sum() != k - 1)
    throw InvalidArgument("fix vector must sum to k - 1");
  if (fix.n[q - 1] < 1) throw InvalidArgument("fix vector needs n_q >= 1");
  if (fix.shift < 0 || fix.shift >= fix.n[q - 1])
    throw InvalidArgument("shift must satisfy 0 <= shift < n_q");

  DepVector dep;
  dep.w.assign(fix.shift, 0);
  for (int j = 1; j <= q; ++j) {
    const int times = (j == q) ? fix.n[j - 1] - fix.shift : fix.n[j - 1];
    dep.w.insert(dep.w.end(), times, j);
  }
  return dep;
}

FixVector dep_to_fix(const DepVector& w, int q) {
  if (w.w.empty()) throw InvalidArgument("empty deployment vector");
  for (std::size_t i = 0; i < w.w.size(); ++i) {
    if (w.w[i] < 0 || w.w[i] > q)
      throw InvalidArgument("deployment component outside [0, q]");
    if (i > 0 && w.w[i - 1] > w.w[i])
      throw InvalidArgument("deployment vector must be non-decreasing");
  }
  if (w.w.back() != q)
    throw InvalidArgument("deployment vector must end with q");

  FixVector fix;
  fix.n.assign(q, 0);
  for (int v : w.w) {
    if (v == 0) {
      ++fix.shift;
      ++fix.n[q - 1];
    } else {
      ++fix.n[v - 1];
    }
  }
  return fix;
}

std::vector<FixVector> enumerate_admissible(const Cycle& sigma, int k) {
  require_degree(sigma, k);
  const int q = sigma.q();
  const Signature sig = signature(sigma);
  std::vector<int> lower = sig.bits;
  lower[q - 1] = std::max(lower[q - 1], 1);
  const int floor_sum = std::accumulate(lower.begin(), lower.end(), 0);

  std::vector<FixVector> out;
  if (floor_sum > k - 1) return out;

  std::vector<int> n(q);
  std::function<void(int, int)> place = [&](int i, int remaining) {
    if (i == q - 1) {
      n[i] = lower[i] + remaining;
      for (int shift = 0; shift < n[q - 1]; ++shift)
        out.push_back(FixVector{n, shift});
      return;
    }
    for (int extra = 0; extra <= remaining; ++extra) {
      n[i] = lower[i] + extra;
      place(i + 1, remaining - extra);
    }
  };
  place(0, k - 1 - floor_sum);
  return out;
}

Integer count_cycle_realizations(const Cycle& sigma, int k) {
  const int d = descent(sigma);
  if (k < d || k < 1) return 0;
  const int q = sigma.q();
  const int a_q = signature(sigma).last();
  return binomial(static_cast<unsigned long>(q + k - d + a_q - 1),
                  static_cast<unsigned long>(q));
}

Integer count_type_realizations(const Cycle& sigma, int k) {
  require_degree(sigma, k);
  const int q = sigma.q();
  const int d = descent(sigma);
  const int s = symmetry_order(sigma);
  const Integer total =
      Integer(k - 1) * binomial(static_cast<unsigned long>(q + k - d - 1),
                                static_cast<unsigned long>(q - 1));
  if (total % s != 0)
    throw InvariantViolation("type count is not divisible by the symmetry "
                             "order");
  return total / s;
}

std::vector<Orbit> rotated_type_realizations(const Cycle& sigma) {
  const int d = descent(sigma);
  if (d < 2)
    throw RotationCycle(sigma.to_string() +
                        " is a rotation cycle and has no minimal realization");
  const Signature sig = signature(sigma);
  int j = 0;
  if (sig.last() != 1) {
    j = 1;
    while (sig[j] != 1) ++j;
  }
  const Cycle rep = conjugate_by_rotation(sigma, j);
  const Orbit base = realize_minimal(rep);
  const int s = symmetry_order(sigma);
  const int count = (d - 1) / s;

  std::vector<Orbit> out;
  out.reserve(count);
  for (int t = 0; t < count; ++t) {
    Rational delta(-t, d - 1);
    delta.canonicalize();
    out.push_back(base.rotated(delta));
  }
  return out;
}

}  // namespace cyclic
