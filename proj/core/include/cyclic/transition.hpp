#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cyclic/cycle.hpp"
#include "cyclic/rational.hpp"

namespace cyclic {

/// Dense row-major square matrix of big integers. Indices are 1-based.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n) {}

  static IntMatrix identity(int n);

  int size() const noexcept { return n_; }

  Integer& operator()(int i, int j) { return data_[index(i, j)]; }
  const Integer& operator()(int i, int j) const { return data_[index(i, j)]; }

  IntMatrix operator*(const IntMatrix& other) const;

  Integer column_sum(int j) const;
  Integer row_sum(int i) const;
  Integer trace() const;

  /// True iff every entry is > 0.
  bool positive() const;

  /// True iff every column sums to the same value; that value is returned.
  std::optional<Integer> common_column_sum() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
  }

  int n_ = 0;
  std::vector<Integer> data_;
};

/// Transition matrix A of a cycle, or the pair matrix B = A + P.
/// Every column sums to `column_sum`.
struct TransitionMatrix {
  IntMatrix entries;
  Integer column_sum;

  int q() const noexcept { return entries.size(); }
};

/// Diagonal of A. Exactly descent - 1 entries are 1.
struct Signature {
  std::vector<int> bits;

  int q() const noexcept { return static_cast<int>(bits.size()); }
  int operator[](int i) const { return bits[i - 1]; }  // 1-based
  int last() const { return bits.back(); }
  int popcount() const;
  /// Indices i_1 < ... < i_{d-1} of the marked intervals.
  std::vector<int> marked_indices() const;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Extra windings (p_1, ..., p_q) of a degree-k realization over the
/// minimal one; the components sum to k - descent.
struct WindingVector {
  std::vector<int> p;

  int total() const;
};

/// True iff j lies in the cyclic interval [from, to) of Z/qZ.
bool in_cyclic_interval(int j, int from, int to, int q) noexcept;

TransitionMatrix transition_matrix(const Cycle& sigma);

Signature signature(const Cycle& sigma);

/// Left rotation by j: entry i of the result is sig[i + j].
/// signature_rotate(signature(s), j) == signature(conjugate_by_rotation(s, j)).
Signature signature_rotate(const Signature& sig, int j);

/// B = A + P where every column of P is p. Throws InvalidArgument on
/// negative components or a length mismatch.
TransitionMatrix pair_matrix(const Cycle& sigma, const WindingVector& p);

IntMatrix matrix_power(const IntMatrix& m, unsigned n);
inline IntMatrix matrix_power(const TransitionMatrix& m, unsigned n) {
  return matrix_power(m.entries, n);
}

/// Least n >= 1 with A^n entrywise positive; nullopt for rotation cycles.
/// The search stops at n = q; failing to find one there throws
/// InvariantViolation.
std::optional<int> regularity_index(const Cycle& sigma);

}  // namespace cyclic
