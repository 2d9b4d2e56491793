#include "cyclic/spectral.hpp"

#include <utility>

#include "cyclic/error.hpp"

namespace cyclic {
namespace {

void require_regular_sum(const TransitionMatrix& m) {
  if (m.column_sum < 2)
    throw InvalidArgument(
        "stationary vector requires column sum >= 2; rotation cycles have "
        "column sum 1 and are realized through pair matrices instead");
  const auto sum = m.entries.common_column_sum();
  if (!sum || *sum != m.column_sum)
    throw InvalidArgument("matrix columns do not share the declared sum");
}

}  // namespace

RationalVector stationary_vector(const TransitionMatrix& m) {
  require_regular_sum(m);
  const int q = m.q();

  // Augmented system [(M - cI) | 0] with the last row replaced by sum = 1.
  std::vector<std::vector<Rational>> rows(q, std::vector<Rational>(q + 1));
  for (int i = 1; i < q; ++i) {
    for (int j = 1; j <= q; ++j) rows[i - 1][j - 1] = Rational(m.entries(i, j));
    rows[i - 1][i - 1] -= Rational(m.column_sum);
  }
  for (int j = 0; j <= q; ++j) rows[q - 1][j] = 1;

  // Gauss-Jordan, pivoting on the first nonzero entry of each column.
  for (int col = 0; col < q; ++col) {
    int pivot = col;
    while (pivot < q && rows[pivot][col] == 0) ++pivot;
    if (pivot == q)
      throw InvariantViolation("stationary system is singular");
    std::swap(rows[col], rows[pivot]);
    const Rational inv = 1 / rows[col][col];
    for (int j = col; j <= q; ++j) rows[col][j] *= inv;
    for (int r = 0; r < q; ++r) {
      if (r == col || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col];
      for (int j = col; j <= q; ++j) rows[r][j] -= factor * rows[col][j];
    }
  }

  RationalVector l(q);
  for (int i = 0; i < q; ++i) l[i] = rows[i][q];
  if (!verify_eigen(m, l))
    throw InvariantViolation("stationary solution failed verification");
  return l;
}

IntMatrix stationary_by_iteration(const TransitionMatrix& m, unsigned n) {
  require_regular_sum(m);
  if (n == 0) throw InvalidArgument("iteration count must be >= 1");
  const int q = m.q();
  const Integer scale = ipow(m.column_sum, q) - 1;
  const Integer divisor = ipow(m.column_sum, n);
  const IntMatrix power = matrix_power(m.entries, n);
  IntMatrix out(q);
  for (int i = 1; i <= q; ++i)
    for (int j = 1; j <= q; ++j)
      out(i, j) = round_nearest(Rational(scale * power(i, j), divisor));
  return out;
}

IterationResult iterate_until_stable(const TransitionMatrix& m,
                                     unsigned max_steps) {
  require_regular_sum(m);
  const int q = m.q();
  auto uniform_column = [q](const IntMatrix& s) -> std::optional<std::vector<Integer>> {
    std::vector<Integer> col(q);
    for (int i = 1; i <= q; ++i) {
      col[i - 1] = s(i, 1);
      for (int j = 2; j <= q; ++j)
        if (s(i, j) != col[i - 1]) return std::nullopt;
    }
    return col;
  };

  // Advance M^n one step at a time rather than recomputing each power.
  const Integer scale = ipow(m.column_sum, q) - 1;
  IntMatrix power = m.entries;
  Integer divisor = m.column_sum;
  std::optional<std::vector<Integer>> previous;
  for (unsigned n = 1; n <= max_steps; ++n) {
    IntMatrix snap(q);
    for (int i = 1; i <= q; ++i)
      for (int j = 1; j <= q; ++j)
        snap(i, j) = round_nearest(Rational(scale * power(i, j), divisor));
    auto current = uniform_column(snap);
    if (current && previous && *current == *previous)
      return IterationResult{std::move(*current), n};
    previous = std::move(current);
    power = power * m.entries;
    divisor *= m.column_sum;
  }
  throw InvariantViolation("power iteration did not stabilize");
}

bool verify_eigen(const TransitionMatrix& m, const RationalVector& l) {
  const int q = m.q();
  if (static_cast<int>(l.size()) != q) return false;
  Rational total = 0;
  for (const auto& v : l) {
    if (v <= 0) return false;
    total += v;
  }
  if (total != 1) return false;
  for (int i = 1; i <= q; ++i) {
    Rational row = 0;
    for (int j = 1; j <= q; ++j) row += Rational(m.entries(i, j)) * l[j - 1];
    if (row != Rational(m.column_sum) * l[i - 1]) return false;
  }
  return true;
}

}  // namespace cyclic
