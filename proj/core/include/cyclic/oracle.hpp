#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclic/cycle.hpp"
#include "cyclic/orbit.hpp"
#include "cyclic/rational.hpp"

namespace cyclic {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct EnumerationOptions {
  /// Largest admissible k^q.
  std::uint64_t budget = kDefaultBudget;
  /// Worker threads; output order does not depend on it.
  unsigned jobs = 1;
};

/// Every period-q orbit of m_k, as numerators over k^q - 1, grouped by the
/// cycle each realizes.
struct OrbitCatalog {
  int q = 0;
  int k = 0;
  /// Sorted by least numerator.
  std::vector<Orbit> orbits;
  /// Indices into `orbits`.
  std::map<Cycle, std::vector<std::size_t>> by_cycle;
  /// Keyed by the canonical representative of each type.
  std::map<Cycle, std::vector<std::size_t>> by_type;
};

/// Number of points of exact period q under m_k, by Moebius inversion of
/// k^j - 1 over the divisors j of q.
Integer exact_period_point_count(int q, int k);

/// Throws BudgetExceeded if k^q exceeds the budget.
void check_budget(int q, int k, std::uint64_t budget);

/// Streams orbits in increasing order of least numerator. The callback sees
/// the sorted numerators of each orbit over k^q - 1.
void for_each_orbit(int q, int k, const EnumerationOptions& options,
                    const std::function<void(const std::vector<std::uint64_t>&)>& sink);

OrbitCatalog enumerate_orbits(int q, int k,
                              const EnumerationOptions& options = {});

/// The unique sigma with m_k(x_i) = x_{sigma(i)}.
Cycle classify(const Orbit& orbit);

struct CycleTally {
  Cycle sigma;
  int descent = 0;
  int last_signature_bit = 0;
  Integer observed;
  Integer expected;
  bool pass = false;
};

struct TypeTally {
  Cycle canonical;
  int descent = 0;
  int symmetry = 0;
  Integer observed;
  Integer expected;
  bool pass = false;
};

/// Discrepancy between an enumerated orbit and the realization rebuilt from
/// its measured fix vector and shift.
struct OrbitMismatch {
  Orbit orbit;
  Cycle sigma;
  std::string detail;
};

struct VerifyOptions {
  EnumerationOptions enumeration;
  /// When set, only cycles in this combinatorial type are checked.
  std::optional<Cycle> restrict_to_type;
  /// Rebuild every enumerated orbit through the realization module.
  bool check_orbits = true;
};

struct VerifyReport {
  int q = 0;
  int k = 0;
  Integer orbit_count;
  Integer expected_orbit_count;
  std::vector<CycleTally> cycles;
  std::vector<TypeTally> types;
  std::size_t orbits_checked = 0;
  std::vector<OrbitMismatch> mismatches;

  bool pass() const;
};

/// Compares brute-force tallies with the closed-form realization counts and
/// rebuilds each enumerated orbit from its fix vector.
VerifyReport verify_counts(int q, int k, const VerifyOptions& options = {});

}  // namespace cyclic
