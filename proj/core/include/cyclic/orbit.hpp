#pragma once

#include <span>
#include <string>
#include <vector>

#include "cyclic/rational.hpp"

namespace cyclic {

/// A period-q orbit of m_k(x) = kx (mod 1).
///
/// Points are held as numerators over the common denominator k^q - 1 and
/// sorted so that 0, x_1, ..., x_q are in positive cyclic order. The
/// factories verify that the set is mapped onto itself by m_k and forms a
/// single cycle of length q.
class Orbit {
 public:
  /// Throws InvalidArgument unless `points` is a period-q orbit of m_k.
  /// The points may be given in any order.
  static Orbit from_points(int k, std::span<const Rational> points);

  /// Numerators over k^q - 1 with q = numerators.size().
  static Orbit from_numerators(int k, std::span<const Integer> numerators);

  int k() const noexcept { return k_; }
  int q() const noexcept { return static_cast<int>(numerators_.size()); }

  /// k^q - 1
  const Integer& denominator() const noexcept { return denominator_; }
  const std::vector<Integer>& numerators() const noexcept {
    return numerators_;
  }

  /// x_i for 1 <= i <= q, reduced.
  Rational point(int i) const;
  RationalVector points() const;

  /// Index j with m_k(x_i) = x_j.
  int image_index(int i) const;

  /// The orbit translated by delta (mod 1).
  Orbit rotated(const Rational& delta) const;

  /// "8/121 24/121 ..." using reduced fractions.
  std::string to_string() const;

  friend bool operator==(const Orbit&, const Orbit&) = default;
  friend auto operator<=>(const Orbit& a, const Orbit& b) {
    if (a.k_ != b.k_) return a.k_ <=> b.k_;
    if (a.numerators_.size() != b.numerators_.size())
      return a.numerators_.size() <=> b.numerators_.size();
    for (std::size_t i = 0; i < a.numerators_.size(); ++i) {
      const int c = cmp(a.numerators_[i], b.numerators_[i]);
      if (c != 0) return c <=> 0;
    }
    return std::strong_ordering::equal;
  }

 private:
  Orbit(int k, Integer denominator, std::vector<Integer> numerators);

  int k_ = 0;
  Integer denominator_;
  std::vector<Integer> numerators_;
};

/// Distribution (n_1, ..., n_q) of the k-1 fixed points j/(k-1) of m_k over
/// the partition intervals I_i = [x_i, x_{i+1}], with I_q wrapping through 0.
/// `shift` counts the fixed points in (0, x_1).
struct FixVector {
  std::vector<int> n;
  int shift = 0;

  int q() const noexcept { return static_cast<int>(n.size()); }
  int sum() const;

  friend bool operator==(const FixVector&, const FixVector&) = default;
  friend auto operator<=>(const FixVector&, const FixVector&) = default;
};

/// Cumulative deployment (w_1, ..., w_{k-1}), w_i = #(orbit ∩ (0, i/(k-1))).
struct DepVector {
  std::vector<int> w;

  friend bool operator==(const DepVector&, const DepVector&) = default;
  friend auto operator<=>(const DepVector&, const DepVector&) = default;
};

/// Counts fixed points of m_k inside each partition interval of `orbit`.
FixVector measure_fix(const Orbit& orbit);

/// Counts orbit points below each fixed point i/(k-1).
DepVector measure_dep(const Orbit& orbit);

std::string to_string(const std::vector<int>& v);

}  // namespace cyclic
