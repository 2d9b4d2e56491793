#pragma once

#include <vector>

#include "cyclic/cycle.hpp"
#include "cyclic/orbit.hpp"
#include "cyclic/rational.hpp"
#include "cyclic/transition.hpp"

namespace cyclic {

/// The unique orbit of m_d realizing sigma, d = descent(sigma).
///
/// Interval lengths come from the stationary vector of A; the first point is
/// x_1 = (1/(d-1)) * sum of l_j over j in [1, sigma(1)).
/// Throws RotationCycle if d == 1 and NotRealizable if sig(sigma) ends in 0.
Orbit realize_minimal(const Cycle& sigma);

/// The unique orbit of m_k realizing sigma with fixed point distribution
/// `fix.n` and `fix.shift` fixed points of m_k in (0, x_1).
///
/// Requires k >= max(descent, 2) and fix.n admissible in degree k
/// (NotAdmissible names the failing clause); 0 <= shift < n_q
/// (ShiftOutOfRange). For k == descent the only admissible vector is the
/// signature itself and the result equals realize_minimal.
Orbit realize_general(const Cycle& sigma, int k, const FixVector& fix);

/// The unique orbit of m_k realizing sigma with deployment vector w.
Orbit realize_from_dep(const Cycle& sigma, int k, const DepVector& w);

/// Throws NotAdmissible unless (n, shift) is admissible for sigma in degree k.
void check_fix_admissible(const Cycle& sigma, int k, const FixVector& fix);

/// Throws NotAdmissible unless w is admissible for sigma in degree k.
void check_dep_admissible(const Cycle& sigma, int k, const DepVector& w);

/// Lists, in order, each index j repeated n_j times, except that q appears
/// n_q - shift times and `shift` zeros lead.
DepVector fix_to_dep(const FixVector& fix, int k);

/// Inverse of fix_to_dep.
FixVector dep_to_fix(const DepVector& w, int q);

/// Every admissible (n, shift) for sigma in degree k, in lexicographic order
/// of n and then shift. k == descent >= 2 yields the signature alone (if its
/// last bit is 1). Throws DegreeTooSmall if k < max(descent, 2).
std::vector<FixVector> enumerate_admissible(const Cycle& sigma, int k);

/// Realizations of sigma under m_k: C(q + k - d + a_q - 1, q), or 0 if k < d.
Integer count_cycle_realizations(const Cycle& sigma, int k);

/// Realizations of [sigma] under m_k: (k-1)/s * C(q + k - d - 1, q - 1).
/// Throws DegreeTooSmall if k < max(descent, 2).
Integer count_type_realizations(const Cycle& sigma, int k);

/// All realizations of [sigma] under m_d as rotated copies O - j/(d-1),
/// 0 <= j < (d-1)/s, where O realizes the first conjugate of sigma whose
/// signature ends in 1.
std::vector<Orbit> rotated_type_realizations(const Cycle& sigma);

}  // namespace cyclic
