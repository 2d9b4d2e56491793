#include <gtest/gtest.h>

#include "cyclic/error.hpp"
#include "cyclic/oracle.hpp"
#include "cyclic/realization.hpp"

namespace cyclic {
namespace {

TEST(DualityTest, FixToDep) {
  EXPECT_EQ(fix_to_dep(FixVector{{1, 0, 1, 0, 1}, 0}, 4).w,
            (std::vector<int>{1, 3, 5}));
  EXPECT_EQ(fix_to_dep(FixVector{{0, 0, 1, 0, 2}, 1}, 4).w,
            (std::vector<int>{0, 3, 5}));
  EXPECT_EQ(fix_to_dep(FixVector{{0, 0, 3}, 2}, 4).w,
            (std::vector<int>{0, 0, 3}));
  EXPECT_THROW(fix_to_dep(FixVector{{0, 0, 1, 0, 2}, 2}, 4), InvalidArgument);
  EXPECT_THROW(fix_to_dep(FixVector{{1, 0, 1, 0, 1}, 0}, 5), InvalidArgument);
}

TEST(DualityTest, DepToFix) {
  EXPECT_EQ(dep_to_fix(DepVector{{3, 5, 5}}, 5),
            (FixVector{{0, 0, 1, 0, 2}, 0}));
  EXPECT_EQ(dep_to_fix(DepVector{{0, 3, 5}}, 5),
            (FixVector{{0, 0, 1, 0, 2}, 1}));
  EXPECT_THROW(dep_to_fix(DepVector{{3, 2, 5}}, 5), InvalidArgument);
  EXPECT_THROW(dep_to_fix(DepVector{{1, 3, 4}}, 5), InvalidArgument);
}

TEST(DualityTest, DeploymentTable) {
  const Cycle sigma = Cycle::parse("(1 2 4 5 3)");
  const std::vector<std::pair<std::vector<int>, std::vector<long>>> table{
      {{1, 3, 5}, {110, 440, 539, 737, 902}},
      {{2, 3, 5}, {46, 184, 523, 736, 898}},
      {{3, 3, 5}, {45, 180, 267, 720, 834}},
      {{3, 4, 5}, {29, 116, 263, 464, 833}},
      {{3, 5, 5}, {25, 100, 262, 400, 577}},
      {{0, 3, 5}, {366, 441, 603, 741, 918}},
  };
  for (const auto& [w, nums] : table) {
    std::vector<Integer> expected(nums.begin(), nums.end());
    const Orbit o = realize_from_dep(sigma, 4, DepVector{w});
    EXPECT_EQ(o, Orbit::from_numerators(4, expected)) << to_string(w);
    EXPECT_EQ(measure_dep(o).w, w);
  }
}

TEST(DualityTest, DepAdmissibilityClauses) {
  const Cycle sigma = Cycle::parse("(1 2 4 5 3)");
  auto clause_of = [&](std::vector<int> w) -> std::optional<Clause> {
    try {
      check_dep_admissible(sigma, 4, DepVector{std::move(w)});
    } catch (const NotAdmissible& e) {
      return e.clause();
    }
    return std::nullopt;
  };
  EXPECT_EQ(clause_of({3, 5}), Clause::kLength);
  EXPECT_EQ(clause_of({-1, 3, 5}), Clause::kNegative);
  EXPECT_EQ(clause_of({1, 6, 5}), Clause::kOutOfRange);
  EXPECT_EQ(clause_of({3, 1, 5}), Clause::kNotMonotone);
  EXPECT_EQ(clause_of({1, 3, 4}), Clause::kLastNotQ);
  EXPECT_EQ(clause_of({1, 2, 5}), Clause::kMissingMarked);
  EXPECT_EQ(clause_of({1, 3, 5}), std::nullopt);
}

// Exhaustive for q <= 6, k <= 5: the two encodings are inverse bijections
// between admissible sets and describe the same orbit.
TEST(DualityProperties, RoundTrips) {
  for (int q = 2; q <= 6; ++q) {
    for (const auto& sigma : all_cycles(q)) {
      const int d = descent(sigma);
      for (int k = std::max(d, 2); k <= 5; ++k) {
        for (const auto& fix : enumerate_admissible(sigma, k)) {
          const DepVector w = fix_to_dep(fix, k);
          ASSERT_NO_THROW(check_dep_admissible(sigma, k, w));
          ASSERT_EQ(dep_to_fix(w, q), fix);
          if (q <= 5) {
            const Orbit o = realize_general(sigma, k, fix);
            ASSERT_EQ(measure_dep(o), w) << sigma.to_string();
            ASSERT_EQ(realize_from_dep(sigma, k, w), o);
          }
        }
      }
    }
  }
}

TEST(DualityProperties, AdmissibleDepVectorsMapToAdmissibleFix) {
  for (int q = 2; q <= 5; ++q) {
    for (const auto& sigma : all_cycles(q)) {
      const int d = descent(sigma);
      for (int k = std::max(d, 2); k <= 5; ++k) {
        // Every non-decreasing w in {0..q}^{k-1}.
        std::vector<int> w(k - 1, 0);
        long admissible = 0;
        while (true) {
          bool ok = true;
          try {
            check_dep_admissible(sigma, k, DepVector{w});
          } catch (const NotAdmissible&) {
            ok = false;
          }
          if (ok) {
            ++admissible;
            const FixVector fix = dep_to_fix(DepVector{w}, q);
            ASSERT_NO_THROW(check_fix_admissible(sigma, k, fix));
            ASSERT_EQ(fix_to_dep(fix, k).w, w);
          }
          int i = k - 2;
          while (i >= 0 && w[i] == q) --i;
          if (i < 0) break;
          ++w[i];
          for (int j = i + 1; j < k - 1; ++j) w[j] = w[i];
        }
        ASSERT_EQ(Integer(admissible), count_cycle_realizations(sigma, k));
      }
    }
  }
}

}  // namespace
}  // namespace cyclic
