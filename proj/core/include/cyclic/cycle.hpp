#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cyclic {

/// A q-cycle acting on {1, ..., q}, held in one-line form.
///
/// Every instance is a single cycle of length q; the factories reject any
/// other permutation. Symbols are 1-based throughout the public API.
class Cycle {
 public:
  /// Parses `(1 s2 ... sq)`. Parentheses are optional, separators are
  /// whitespace or commas, and the first symbol must be 1.
  static Cycle parse(std::string_view text);

  /// Parses one-line images `s(1) s(2) ... s(q)`.
  static Cycle parse_one_line(std::string_view text);

  /// `symbols` lists 1, s(1), s^2(1), ... as in cycle notation.
  static Cycle from_cycle_notation(std::span<const int> symbols);

  /// `images[i-1]` is the image of i.
  static Cycle from_one_line(std::span<const int> images);

  /// The generator (1 2 ... q).
  static Cycle rho(int q);

  /// rho^p; requires 1 <= p < q and gcd(p, q) = 1.
  static Cycle rotation(int q, int p);

  int q() const noexcept { return static_cast<int>(table_.size()); }

  /// Image of i, with i taken modulo q into {1, ..., q}.
  int operator()(int i) const noexcept { return table_[wrap(i) - 1]; }

  const std::vector<int>& table() const noexcept { return table_; }

  std::vector<int> cycle_notation() const;

  /// "(1 2 4 5 3)"
  std::string to_string() const;

  /// "2 4 1 5 3"
  std::string to_one_line_string() const;

  /// Reduces any integer to its representative in {1, ..., q}.
  int wrap(int i) const noexcept {
    const int q = this->q();
    int r = i % q;
    if (r <= 0) r += q;
    return r;
  }

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle& a, const Cycle& b) {
    return a.table_ <=> b.table_;
  }

 private:
  explicit Cycle(std::vector<int> table) : table_(std::move(table)) {}

  std::vector<int> table_;
};

/// Number of i in Z/qZ with s(i) > s(i+1) in the linear order of {1..q}.
int descent(const Cycle& sigma);

/// rho^{-j} sigma rho^{j}; j is taken modulo q.
Cycle conjugate_by_rotation(const Cycle& sigma, int j);

/// Order of the stabilizer of sigma under conjugation by rotations.
int symmetry_order(const Cycle& sigma);

bool is_rotation_cycle(const Cycle& sigma);

/// p with sigma == rho^p, if sigma is a rotation cycle.
std::optional<int> rotation_power(const Cycle& sigma);

struct CombinatorialType {
  /// representatives[j] == conjugate_by_rotation(sigma, j) for 0 <= j < r.
  std::vector<Cycle> representatives;
  /// Lexicographically least one-line table among the representatives.
  Cycle canonical;
  int symmetry;

  std::size_t size() const noexcept { return representatives.size(); }
};

CombinatorialType combinatorial_type(const Cycle& sigma);

/// Canonical representative of [sigma] without building the whole type.
Cycle canonical_representative(const Cycle& sigma);

inline constexpr int kDefaultTypeBound = 9;

/// All q-cycles, ordered by one-line table.
std::vector<Cycle> all_cycles(int q, int bound = kDefaultTypeBound);

/// Partition of all (q-1)! q-cycles into combinatorial types, ordered by
/// canonical representative. Throws InvalidArgument if q > bound.
std::vector<CombinatorialType> enumerate_types(int q,
                                               int bound = kDefaultTypeBound);

}  // namespace cyclic
