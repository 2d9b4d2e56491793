#include <gtest/gtest.h>

#include "cyclic/cycle.hpp"
#include "cyclic/error.hpp"
#include "cyclic/spectral.hpp"
#include "cyclic/transition.hpp"

namespace cyclic {
namespace {

RationalVector over(std::initializer_list<long> nums, long den) {
  RationalVector out;
  for (long n : nums) {
    Rational r(n, den);
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

TEST(SpectralTest, FiveCycle) {
  const auto a = transition_matrix(Cycle::parse("(1 2 4 5 3)"));
  EXPECT_EQ(stationary_vector(a), over({32, 38, 58, 46, 68}, 242));
}

TEST(SpectralTest, SixCycleIsPeriodic) {
  const auto a = transition_matrix(Cycle::parse("(1 2 5 6 3 4)"));
  EXPECT_EQ(stationary_vector(a),
            over({546, 819, 546, 819, 546, 819}, 4095));
}

TEST(SpectralTest, EightCycleIsPeriodic) {
  const auto a = transition_matrix(Cycle::parse("(1 2 4 7 5 6 8 3)"));
  EXPECT_EQ(stationary_vector(a),
            over({21284, 52584, 53836, 67608, 21284, 52584, 53836, 67608},
                 390624));
}

TEST(SpectralTest, PairMatrixVector) {
  const Cycle sigma = Cycle::parse("(1 2 4 5 3)");
  const auto b = pair_matrix(sigma, WindingVector{{1, 0, 0, 0, 0}});
  EXPECT_EQ(stationary_vector(b), over({10, 3, 6, 5, 7}, 31));
}

TEST(SpectralTest, RejectsColumnSumOne) {
  EXPECT_THROW(stationary_vector(transition_matrix(Cycle::rho(5))),
               InvalidArgument);
  EXPECT_THROW(iterate_until_stable(transition_matrix(Cycle::rho(5))),
               InvalidArgument);
}

TEST(SpectralTest, IterationReachesScaledVector) {
  const auto a = transition_matrix(Cycle::parse("(1 2 4 5 3)"));
  const IntMatrix snap = stationary_by_iteration(a, 40);
  const std::vector<Integer> expected{32, 38, 58, 46, 68};
  for (int j = 1; j <= 5; ++j)
    for (int i = 1; i <= 5; ++i) EXPECT_EQ(snap(i, j), expected[i - 1]);

  const auto result = iterate_until_stable(a);
  EXPECT_EQ(result.column, expected);
  EXPECT_LE(result.steps, 40u);
  EXPECT_THROW(stationary_by_iteration(a, 0), InvalidArgument);
}

TEST(SpectralTest, VerifyEigenRejectsWrongVectors) {
  const auto a = transition_matrix(Cycle::parse("(1 2 4 5 3)"));
  const auto l = over({32, 38, 58, 46, 68}, 242);
  EXPECT_TRUE(verify_eigen(a, l));
  auto swapped = l;
  std::swap(swapped[0], swapped[1]);
  EXPECT_FALSE(verify_eigen(a, swapped));
  auto scaled = l;
  for (auto& v : scaled) v *= 2;
  EXPECT_FALSE(verify_eigen(a, scaled));
  EXPECT_FALSE(verify_eigen(a, over({1, 1, 1, 1}, 4)));
}

// Exhaustive for q <= 7: the solver agrees with power iteration and
// (c^q - 1) l is integral.
TEST(SpectralProperties, SolverMatchesIteration) {
  for (int q = 3; q <= 7; ++q) {
    for (const auto& sigma : all_cycles(q)) {
      const int d = descent(sigma);
      if (d < 2) continue;
      const auto a = transition_matrix(sigma);
      const RationalVector l = stationary_vector(a);
      ASSERT_TRUE(verify_eigen(a, l));
      const Integer scale = ipow(Integer(d), q) - 1;
      const auto iterated = iterate_until_stable(a);
      for (int i = 0; i < q; ++i) {
        const Rational scaled = l[i] * Rational(scale);
        ASSERT_EQ(scaled.get_den(), 1) << sigma.to_string();
        ASSERT_EQ(scaled.get_num(), iterated.column[i]) << sigma.to_string();
      }
    }
  }
}

TEST(SpectralProperties, PairMatricesHaveStationaryVectors) {
  for (int q = 2; q <= 6; ++q) {
    for (const auto& sigma : all_cycles(q)) {
      const Signature sig = signature(sigma);
      for (int extra = 0; extra < q; ++extra) {
        WindingVector p{std::vector<int>(q, 0)};
        p.p[extra] = 1;
        if (sig.popcount() == 0) p.p[q - 1] += 1;
        const auto b = pair_matrix(sigma, p);
        ASSERT_TRUE(verify_eigen(b, stationary_vector(b))) << sigma.to_string();
      }
    }
  }
}

}  // namespace
}  // namespace cyclic
