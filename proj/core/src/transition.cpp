#include "cyclic/transition.hpp"

#include <numeric>

#include "cyclic/error.hpp"

namespace cyclic {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 1; i <= n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (n_ != other.n_) throw InvalidArgument("matrix dimension mismatch");
  IntMatrix out(n_);
  for (int i = 1; i <= n_; ++i) {
    for (int l = 1; l <= n_; ++l) {
      const Integer& a = (*this)(i, l);
      if (a == 0) continue;
      for (int j = 1; j <= n_; ++j) out(i, j) += a * other(l, j);
    }
  }
  return out;
}

Integer IntMatrix::column_sum(int j) const {
  Integer s = 0;
  for (int i = 1; i <= n_; ++i) s += (*this)(i, j);
  return s;
}

Integer IntMatrix::row_sum(int i) const {
  Integer s = 0;
  for (int j = 1; j <= n_; ++j) s += (*this)(i, j);
  return s;
}

Integer IntMatrix::trace() const {
  Integer s = 0;
  for (int i = 1; i <= n_; ++i) s += (*this)(i, i);
  return s;
}

bool IntMatrix::positive() const {
  for (const auto& e : data_)
    if (e <= 0) return false;
  return true;
}

std::optional<Integer> IntMatrix::common_column_sum() const {
  if (n_ == 0) return std::nullopt;
  Integer first = column_sum(1);
  for (int j = 2; j <= n_; ++j)
    if (column_sum(j) != first) return std::nullopt;
  return first;
}

int Signature::popcount() const {
  return std::accumulate(bits.begin(), bits.end(), 0);
}

std::vector<int> Signature::marked_indices() const {
  std::vector<int> out;
  for (int i = 1; i <= q(); ++i)
    if ((*this)[i]) out.push_back(i);
  return out;
}

int WindingVector::total() const {
  return std::accumulate(p.begin(), p.end(), 0);
}

bool in_cyclic_interval(int j, int from, int to, int q) noexcept {
  // Offsets measured from `from` going up through q and wrapping to 1.
  const int offset_j = ((j - from) % q + q) % q;
  const int offset_to = ((to - from) % q + q) % q;
  return offset_j < offset_to;
}

TransitionMatrix transition_matrix(const Cycle& sigma) {
  const int q = sigma.q();
  IntMatrix a(q);
  for (int i = 1; i <= q; ++i) {
    const int from = sigma(i);
    const int to = sigma(i + 1);
    for (int j = 1; j <= q; ++j)
      if (in_cyclic_interval(j, from, to, q)) a(i, j) = 1;
  }
  return TransitionMatrix{std::move(a), Integer(descent(sigma))};
}

Signature signature(const Cycle& sigma) {
  const int q = sigma.q();
  Signature sig;
  sig.bits.resize(q);
  // a_ii = 1 iff i lies in [sigma(i), sigma(i+1))
  for (int i = 1; i <= q; ++i)
    sig.bits[i - 1] = in_cyclic_interval(i, sigma(i), sigma(i + 1), q) ? 1 : 0;
  return sig;
}

Signature signature_rotate(const Signature& sig, int j) {
  const int q = sig.q();
  Signature out;
  out.bits.resize(q);
  for (int i = 0; i < q; ++i) out.bits[i] = sig.bits[((i + j) % q + q) % q];
  return out;
}

TransitionMatrix pair_matrix(const Cycle& sigma, const WindingVector& p) {
  const int q = sigma.q();
  if (static_cast<int>(p.p.size()) != q)
    throw InvalidArgument("winding vector length must equal q");
  for (int v : p.p)
    if (v < 0) throw InvalidArgument("winding vector has a negative component");
  TransitionMatrix b = transition_matrix(sigma);
  for (int i = 1; i <= q; ++i)
    for (int j = 1; j <= q; ++j) b.entries(i, j) += p.p[i - 1];
  b.column_sum += p.total();
  return b;
}

IntMatrix matrix_power(const IntMatrix& m, unsigned n) {
  IntMatrix result = IntMatrix::identity(m.size());
  IntMatrix base = m;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

std::optional<int> regularity_index(const Cycle& sigma) {
  if (descent(sigma) == 1) return std::nullopt;
  const IntMatrix a = transition_matrix(sigma).entries;
  IntMatrix power = a;
  for (int n = 1; n <= sigma.q(); ++n) {
    if (power.positive()) return n;
    power = power * a;
  }
  throw InvariantViolation("A^q is not positive for " + sigma.to_string() +
                           " although its descent number is at least 2");
}

}  // namespace cyclic
