#pragma once

#include "cyclic/rational.hpp"
#include "cyclic/transition.hpp"

namespace cyclic {

/// The unique probability vector l with M l = c l, where c is the common
/// column sum of M (c >= 2).
///
/// Solves (M - cI) l = 0 exactly over Q with the last equation replaced by
/// sum(l) = 1. Throws InvalidArgument if c < 2, and InvariantViolation if
/// the system turns out singular or the solution is not strictly positive.
RationalVector stationary_vector(const TransitionMatrix& m);

/// Entrywise nearest-integer rounding of (c^q - 1) c^{-n} M^n, computed
/// exactly. Once n is large enough every column equals (c^q - 1) l.
IntMatrix stationary_by_iteration(const TransitionMatrix& m, unsigned n);

/// Result of running stationary_by_iteration until two consecutive
/// snapshots agree and have identical columns.
struct IterationResult {
  std::vector<Integer> column;  // (c^q - 1) l
  unsigned steps = 0;           // n at which the snapshot stabilized
};

/// Throws InvariantViolation if no stable snapshot appears by `max_steps`.
IterationResult iterate_until_stable(const TransitionMatrix& m,
                                     unsigned max_steps = 4096);

/// Independent check: M l == c l exactly, sum(l) == 1 and l > 0.
bool verify_eigen(const TransitionMatrix& m, const RationalVector& l);

}  // namespace cyclic
