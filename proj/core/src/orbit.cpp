#include "cyclic/orbit.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "cyclic/error.hpp"

namespace cyclic {
namespace {

Integer orbit_denominator(int k, int q) {
  if (k < 2) throw InvalidArgument("degree k must be at least 2");
  if (q < 1) throw InvalidArgument("orbit must be non-empty");
  return ipow(Integer(k), static_cast<unsigned long>(q)) - 1;
}

}  // namespace

Orbit::Orbit(int k, Integer denominator, std::vector<Integer> numerators)
    : k_(k),
      denominator_(std::move(denominator)),
      numerators_(std::move(numerators)) {}

Orbit Orbit::from_numerators(int k, std::span<const Integer> numerators) {
  const int q = static_cast<int>(numerators.size());
  Integer den = orbit_denominator(k, q);
  std::vector<Integer> nums(numerators.begin(), numerators.end());
  std::sort(nums.begin(), nums.end());
  for (std::size_t i = 0; i < nums.size(); ++i) {
    if (nums[i] <= 0 || nums[i] >= den)
      throw InvalidArgument("orbit point outside (0, 1)");
    if (i > 0 && nums[i] == nums[i - 1])
      throw InvalidArgument("orbit points must be distinct");
  }

  // m_k acts on numerators as multiplication by k modulo k^q - 1.
  std::map<Integer, int> position;
  for (int i = 0; i < q; ++i) position.emplace(nums[i], i);
  std::vector<int> image(q);
  for (int i = 0; i < q; ++i) {
    Integer y = (nums[i] * k) % den;
    auto it = position.find(y);
    if (it == position.end())
      throw InvalidArgument("point set is not invariant under m_k");
    image[i] = it->second;
  }
  int x = 0;
  for (int step = 1; step <= q; ++step) {
    x = image[x];
    if (x == 0 && step != q)
      throw InvalidArgument("points do not form a single orbit of period q");
  }
  return Orbit(k, std::move(den), std::move(nums));
}

Orbit Orbit::from_points(int k, std::span<const Rational> points) {
  const int q = static_cast<int>(points.size());
  const Integer den = orbit_denominator(k, q);
  std::vector<Integer> nums;
  nums.reserve(points.size());
  for (const auto& x : points) {
    Rational scaled = x * Rational(den);
    if (scaled.get_den() != 1)
      throw InvalidArgument("point " + cyclic::to_string(x) +
                            " cannot have period q under m_k");
    nums.push_back(scaled.get_num());
  }
  return from_numerators(k, nums);
}

Rational Orbit::point(int i) const {
  Rational r(numerators_.at(i - 1), denominator_);
  r.canonicalize();
  return r;
}

RationalVector Orbit::points() const {
  RationalVector out;
  out.reserve(numerators_.size());
  for (int i = 1; i <= q(); ++i) out.push_back(point(i));
  return out;
}

int Orbit::image_index(int i) const {
  const Integer y = (numerators_.at(i - 1) * k_) % denominator_;
  auto it = std::lower_bound(numerators_.begin(), numerators_.end(), y);
  return static_cast<int>(it - numerators_.begin()) + 1;
}

Orbit Orbit::rotated(const Rational& delta) const {
  Rational scaled = delta * Rational(denominator_);
  if (scaled.get_den() != 1)
    throw InvalidArgument("rotation does not preserve the common denominator");
  std::vector<Integer> nums;
  nums.reserve(numerators_.size());
  for (const auto& a : numerators_) {
    Integer b;
    const Integer shifted = a + scaled.get_num();
    mpz_fdiv_r(b.get_mpz_t(), shifted.get_mpz_t(), denominator_.get_mpz_t());
    nums.push_back(std::move(b));
  }
  return from_numerators(k_, nums);
}

std::string Orbit::to_string() const {
  std::ostringstream os;
  for (int i = 1; i <= q(); ++i) {
    if (i > 1) os << ' ';
    os << cyclic::to_string(point(i));
  }
  return os.str();
}

int FixVector::sum() const { return std::accumulate(n.begin(), n.end(), 0); }

FixVector measure_fix(const Orbit& orbit) {
  const int q = orbit.q();
  const int k = orbit.k();
  const auto& nums = orbit.numerators();
  const Integer& den = orbit.denominator();

  FixVector fix;
  fix.n.assign(q, 0);
  fix.n[q - 1] = 1;  // the fixed point 0 lies in I_q
  for (int j = 1; j <= k - 2; ++j) {
    // below = #{i : x_i < j/(k-1)}; x_i never equals a fixed point.
    int below = 0;
    for (const auto& a : nums) {
      const Integer lhs = a * (k - 1);
      const Integer rhs = den * j;
      if (lhs == rhs)
        throw InvariantViolation("fixed point coincides with an orbit point");
      if (lhs < rhs) ++below;
    }
    if (below == 0) {
      ++fix.shift;
      ++fix.n[q - 1];
    } else {
      ++fix.n[below - 1];
    }
  }
  return fix;
}

DepVector measure_dep(const Orbit& orbit) {
  const int k = orbit.k();
  const auto& nums = orbit.numerators();
  const Integer& den = orbit.denominator();
  DepVector dep;
  dep.w.reserve(k - 1);
  for (int i = 1; i <= k - 1; ++i) {
    int count = 0;
    for (const auto& a : nums)
      if (a * (k - 1) < den * i) ++count;
    dep.w.push_back(count);
  }
  return dep;
}

std::string to_string(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace cyclic
