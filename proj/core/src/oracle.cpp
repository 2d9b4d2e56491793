#include "cyclic/oracle.hpp"

#include <algorithm>
#include <thread>

#include "cyclic/error.hpp"
#include "cyclic/realization.hpp"
#include "cyclic/transition.hpp"

namespace cyclic {
namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::uint64_t power_within_budget(int q, int k, std::uint64_t budget) {
  if (k < 2) throw InvalidArgument("degree k must be at least 2");
  if (q < 2) throw InvalidArgument("period q must be at least 2");
  u128 value = 1;
  for (int i = 0; i < q; ++i) {
    value *= static_cast<unsigned>(k);
    if (value > budget)
      throw BudgetExceeded("k^q = " + std::to_string(k) + "^" +
                           std::to_string(q) + " exceeds the budget " +
                           std::to_string(budget));
  }
  return static_cast<std::uint64_t>(value);
}

// Orbits whose least numerator lies in [lo, hi), in increasing order.
std::vector<std::vector<std::uint64_t>> scan(int q, std::uint64_t k,
                                             std::uint64_t modulus,
                                             std::uint64_t lo,
                                             std::uint64_t hi) {
  std::vector<std::vector<std::uint64_t>> found;
  std::vector<std::uint64_t> points(q);
  for (std::uint64_t a = lo; a < hi; ++a) {
    std::uint64_t x = a;
    int period = 0;
    bool least = true;
    for (int step = 1; step <= q; ++step) {
      points[step - 1] = x;
      x = mulmod(x, k, modulus);
      if (x == a) {
        period = step;
        break;
      }
      if (x < a) {
        least = false;
        break;
      }
    }
    if (!least || period != q) continue;
    std::vector<std::uint64_t> sorted(points.begin(), points.begin() + q);
    std::sort(sorted.begin(), sorted.end());
    found.push_back(std::move(sorted));
  }
  return found;
}

// Independent of Orbit::image_index: works on raw machine numerators.
Cycle classify_numerators(const std::vector<std::uint64_t>& nums,
                          std::uint64_t k, std::uint64_t modulus) {
  const int q = static_cast<int>(nums.size());
  std::vector<int> images(q);
  for (int i = 0; i < q; ++i) {
    const auto y = mulmod(nums[i], k, modulus);
    const auto it = std::lower_bound(nums.begin(), nums.end(), y);
    if (it == nums.end() || *it != y)
      throw InvariantViolation("orbit is not closed under m_k");
    images[i] = static_cast<int>(it - nums.begin()) + 1;
  }
  return Cycle::from_one_line(images);
}

std::vector<Integer> to_integers(const std::vector<std::uint64_t>& nums) {
  std::vector<Integer> out;
  out.reserve(nums.size());
  for (auto v : nums) {
    Integer z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    out.push_back(std::move(z));
  }
  return out;
}

std::string check_orbit(const Orbit& orbit, const Cycle& sigma) {
  const int k = orbit.k();
  const FixVector fix = measure_fix(orbit);
  const DepVector dep = measure_dep(orbit);
  try {
    if (fix_to_dep(fix, k) != dep)
      return "measured dep " + to_string(dep.w) + " differs from fix_to_dep " +
             to_string(fix_to_dep(fix, k).w);
    if (dep_to_fix(dep, orbit.q()) != fix)
      return "dep_to_fix does not recover the measured fix vector";
    const Orbit rebuilt = realize_general(sigma, k, fix);
    if (rebuilt != orbit)
      return "realize_general gives " + rebuilt.to_string();
    const Orbit from_dep = realize_from_dep(sigma, k, dep);
    if (from_dep != orbit)
      return "realize_from_dep gives " + from_dep.to_string();
  } catch (const Error& e) {
    return std::string("realization failed: ") + e.what();
  }
  return {};
}

}  // namespace

Integer exact_period_point_count(int q, int k) {
  Integer total = 0;
  for (int j = 1; j <= q; ++j) {
    if (q % j) continue;
    const int mu = moebius(q / j);
    if (mu == 0) continue;
    total += mu * (ipow(Integer(k), static_cast<unsigned long>(j)) - 1);
  }
  return total;
}

void check_budget(int q, int k, std::uint64_t budget) {
  power_within_budget(q, k, budget);
}

void for_each_orbit(
    int q, int k, const EnumerationOptions& options,
    const std::function<void(const std::vector<std::uint64_t>&)>& sink) {
  const std::uint64_t modulus = power_within_budget(q, k, options.budget) - 1;
  const std::uint64_t kk = static_cast<std::uint64_t>(k);
  const unsigned jobs = std::max(1u, options.jobs);

  if (jobs == 1 || modulus < 1024) {
    for (const auto& orbit : scan(q, kk, modulus, 1, modulus)) sink(orbit);
    return;
  }

  std::vector<std::vector<std::vector<std::uint64_t>>> parts(jobs);
  std::vector<std::thread> workers;
  const std::uint64_t chunk = (modulus - 1 + jobs - 1) / jobs;
  for (unsigned w = 0; w < jobs; ++w) {
    const std::uint64_t lo = 1 + w * chunk;
    const std::uint64_t hi = std::min<std::uint64_t>(modulus, lo + chunk);
    workers.emplace_back([&, w, lo, hi] {
      if (lo < hi) parts[w] = scan(q, kk, modulus, lo, hi);
    });
  }
  for (auto& t : workers) t.join();
  for (const auto& part : parts)
    for (const auto& orbit : part) sink(orbit);
}

OrbitCatalog enumerate_orbits(int q, int k, const EnumerationOptions& options) {
  OrbitCatalog catalog;
  catalog.q = q;
  catalog.k = k;
  const std::uint64_t modulus = power_within_budget(q, k, options.budget) - 1;
  std::map<Cycle, Cycle> canonical_of;
  for_each_orbit(q, k, options, [&](const std::vector<std::uint64_t>& nums) {
    const Cycle sigma = classify_numerators(nums, static_cast<std::uint64_t>(k),
                                            modulus);
    auto it = canonical_of.find(sigma);
    if (it == canonical_of.end())
      it = canonical_of.emplace(sigma, canonical_representative(sigma)).first;
    const std::size_t index = catalog.orbits.size();
    catalog.orbits.push_back(Orbit::from_numerators(k, to_integers(nums)));
    catalog.by_cycle[sigma].push_back(index);
    catalog.by_type[it->second].push_back(index);
  });
  if (Integer(catalog.orbits.size()) * q != exact_period_point_count(q, k))
    throw InvariantViolation("orbit count disagrees with the Moebius count");
  return catalog;
}

Cycle classify(const Orbit& orbit) {
  const int q = orbit.q();
  std::vector<int> images(q);
  for (int i = 1; i <= q; ++i) {
    const Rational image = frac(Rational(orbit.k()) * orbit.point(i));
    int match = 0;
    for (int j = 1; j <= q; ++j) {
      if (orbit.point(j) == image) {
        match = j;
        break;
      }
    }
    if (match == 0) throw InvariantViolation("orbit is not closed under m_k");
    images[i - 1] = match;
  }
  return Cycle::from_one_line(images);
}

bool VerifyReport::pass() const {
  if (orbit_count != expected_orbit_count) return false;
  if (!mismatches.empty()) return false;
  for (const auto& c : cycles)
    if (!c.pass) return false;
  for (const auto& t : types)
    if (!t.pass) return false;
  return true;
}

VerifyReport verify_counts(int q, int k, const VerifyOptions& options) {
  const std::uint64_t modulus =
      power_within_budget(q, k, options.enumeration.budget) - 1;
  VerifyReport report;
  report.q = q;
  report.k = k;
  report.orbit_count = 0;
  report.expected_orbit_count = exact_period_point_count(q, k) / q;

  std::vector<Cycle> cycles;
  if (options.restrict_to_type) {
    cycles = combinatorial_type(*options.restrict_to_type).representatives;
    std::sort(cycles.begin(), cycles.end());
  } else {
    cycles = all_cycles(q, std::max(q, kDefaultTypeBound));
  }
  std::map<Cycle, Integer> tally;
  for (const auto& sigma : cycles) tally.emplace(sigma, 0);

  for_each_orbit(q, k, options.enumeration,
                 [&](const std::vector<std::uint64_t>& nums) {
    ++report.orbit_count;
    const Cycle sigma =
        classify_numerators(nums, static_cast<std::uint64_t>(k), modulus);
    auto it = tally.find(sigma);
    if (it == tally.end()) return;
    ++it->second;
    if (!options.check_orbits) return;
    ++report.orbits_checked;
    const Orbit orbit = Orbit::from_numerators(k, to_integers(nums));
    if (classify(orbit) != sigma) {
      report.mismatches.push_back({orbit, sigma, "classify disagrees"});
      return;
    }
    if (auto detail = check_orbit(orbit, sigma); !detail.empty())
      report.mismatches.push_back({orbit, sigma, std::move(detail)});
  });

  std::map<Cycle, TypeTally> types;
  for (const auto& sigma : cycles) {
    const Signature sig = signature(sigma);
    CycleTally row{sigma, descent(sigma), sig.last(), tally.at(sigma),
                   count_cycle_realizations(sigma, k), false};
    row.pass = row.observed == row.expected;

    const Cycle canonical = canonical_representative(sigma);
    auto t = types.find(canonical);
    if (t == types.end()) {
      TypeTally fresh{canonical, row.descent, symmetry_order(sigma), 0,
                      k >= std::max(row.descent, 2)
                          ? count_type_realizations(sigma, k)
                          : Integer(0),
                      false};
      t = types.emplace(canonical, std::move(fresh)).first;
    }
    t->second.observed += row.observed;
    report.cycles.push_back(std::move(row));
  }
  for (auto& [canonical, row] : types) {
    row.pass = row.observed == row.expected;
    report.types.push_back(std::move(row));
  }
  return report;
}

}  // namespace cyclic
