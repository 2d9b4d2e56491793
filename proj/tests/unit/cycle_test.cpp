#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "brute.hpp"
#include "cyclic/cycle.hpp"
#include "cyclic/error.hpp"

namespace cyclic {
namespace {

std::vector<int> v(std::initializer_list<int> xs) { return xs; }

TEST(CycleTest, ParsesCycleNotation) {
  EXPECT_EQ(Cycle::parse("(1 2 4 5 3)").table(), v({2, 4, 1, 5, 3}));
  EXPECT_EQ(Cycle::parse("(1 2)").table(), v({2, 1}));
  EXPECT_EQ(Cycle::parse("1,2,4,5,3").table(), v({2, 4, 1, 5, 3}));
  EXPECT_EQ(Cycle::parse("(1 2 4 5 3)").to_string(), "(1 2 4 5 3)");
}

TEST(CycleTest, RejectsMalformedNotation) {
  EXPECT_THROW(Cycle::parse("(1 2 2 4 5)"), ParseError);
  EXPECT_THROW(Cycle::parse("(2 1 3)"), ParseError);
  EXPECT_THROW(Cycle::parse("(1 2 7)"), ParseError);
  EXPECT_THROW(Cycle::parse("(1 2 3"), ParseError);
  EXPECT_THROW(Cycle::parse("(1 a 3)"), ParseError);
  EXPECT_THROW(Cycle::parse(""), ParseError);
  try {
    Cycle::parse("(1 2 2 4 5)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
}

TEST(CycleTest, OneLineInput) {
  EXPECT_EQ(Cycle::parse_one_line("2 4 1 5 3"), Cycle::parse("(1 2 4 5 3)"));
  EXPECT_EQ(Cycle::parse("(1 2 4 5 3)").to_one_line_string(), "2 4 1 5 3");
  // (1 2)(3 4) is a permutation but not a 4-cycle.
  EXPECT_THROW(Cycle::parse_one_line("2 1 4 3"), ParseError);
}

TEST(CycleTest, RotationCycles) {
  EXPECT_EQ(Cycle::rotation(5, 2).to_string(), "(1 3 5 2 4)");
  EXPECT_EQ(Cycle::rotation(5, 1).to_string(), "(1 2 3 4 5)");
  EXPECT_EQ(Cycle::rotation(5, 1), Cycle::rho(5));
  EXPECT_THROW(Cycle::rotation(4, 2), InvalidArgument);
  EXPECT_EQ(rotation_power(Cycle::rotation(7, 3)), 3);
  EXPECT_FALSE(rotation_power(Cycle::parse("(1 2 4 5 3)")).has_value());
}

TEST(CycleTest, DescentExamples) {
  EXPECT_EQ(descent(Cycle::parse("(1 2 4 5 3)")), 3);
  EXPECT_EQ(descent(Cycle::parse("(1 3 2 6 4 5)")), 3);
  EXPECT_EQ(descent(Cycle::parse("(1 5 4 6 2 3)")), 4);
  EXPECT_EQ(descent(Cycle::parse("(1 2 3 5 4)")), 2);
  EXPECT_EQ(descent(Cycle::parse("(1 3 5 4 2)")), 3);
  for (int q = 2; q <= 9; ++q)
    for (int p = 1; p < q; ++p)
      if (std::gcd(p, q) == 1) EXPECT_EQ(descent(Cycle::rotation(q, p)), 1);
}

TEST(CycleTest, SymmetryOrderExamples) {
  EXPECT_EQ(symmetry_order(Cycle::parse("(1 2 5 6 3 4)")), 3);
  EXPECT_EQ(symmetry_order(Cycle::parse("(1 2 4 7 5 6 8 3)")), 2);
  EXPECT_EQ(symmetry_order(Cycle::parse("(1 2 4 5 3)")), 1);
  EXPECT_EQ(symmetry_order(Cycle::rotation(7, 2)), 7);
}

TEST(CycleTest, ConjugationExamples) {
  const Cycle sigma = Cycle::parse("(1 2 4 5 3)");
  EXPECT_EQ(conjugate_by_rotation(sigma, 3).to_string(), "(1 2 5 3 4)");
  EXPECT_EQ(conjugate_by_rotation(sigma, 0), sigma);
  EXPECT_EQ(conjugate_by_rotation(sigma, 5), sigma);
  EXPECT_EQ(conjugate_by_rotation(sigma, -2), conjugate_by_rotation(sigma, 3));
  EXPECT_EQ(conjugate_by_rotation(Cycle::parse("(1 2 4 7 5 6 8 3)"), 3)
                .to_string(),
            "(1 4 2 3 5 8 6 7)");
}

TEST(CycleTest, CombinatorialTypes) {
  EXPECT_EQ(combinatorial_type(Cycle::rho(5)).size(), 1u);
  const auto five = combinatorial_type(Cycle::parse("(1 2 4 5 3)"));
  EXPECT_EQ(five.size(), 5u);
  EXPECT_EQ(std::set<Cycle>(five.representatives.begin(),
                            five.representatives.end())
                .size(),
            5u);
  const auto six = combinatorial_type(Cycle::parse("(1 2 5 6 3 4)"));
  EXPECT_EQ(six.size(), 2u);
  EXPECT_EQ(six.symmetry, 3);
  EXPECT_EQ(six.representatives[0], Cycle::parse("(1 2 5 6 3 4)"));
}

TEST(CycleTest, TypeCensus) {
  EXPECT_EQ(enumerate_types(5).size(), 8u);
  EXPECT_EQ(enumerate_types(3).size(), 2u);
  // (6! + 6^2) / 7
  EXPECT_EQ(enumerate_types(7).size(), 108u);
  EXPECT_THROW(enumerate_types(10), InvalidArgument);
  EXPECT_THROW(enumerate_types(6, 5), InvalidArgument);

  for (int q = 2; q <= 8; ++q) {
    const auto types = enumerate_types(q);
    std::size_t total = 0;
    std::set<Cycle> members;
    for (std::size_t t = 0; t < types.size(); ++t) {
      total += types[t].size();
      EXPECT_EQ(static_cast<int>(types[t].size()) * types[t].symmetry, q);
      for (const auto& c : types[t].representatives) members.insert(c);
      if (t > 0) EXPECT_LT(types[t - 1].canonical, types[t].canonical);
    }
    long factorial = 1;
    for (int i = 2; i < q; ++i) factorial *= i;
    EXPECT_EQ(static_cast<long>(total), factorial) << "q = " << q;
    EXPECT_EQ(members.size(), total) << "types overlap for q = " << q;
  }
}

TEST(CycleTest, AllCyclesMatchesFilteredPermutations) {
  for (int q = 2; q <= 7; ++q) {
    auto expected = testing::cycles_by_filter(q);
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(all_cycles(q), expected);
  }
}

// Exhaustive invariants for q <= 7.
TEST(CycleProperties, DescentIsConjugationInvariant) {
  for (int q = 2; q <= 7; ++q) {
    for (const auto& sigma : all_cycles(q)) {
      const int d = descent(sigma);
      for (int j = 0; j < q; ++j)
        ASSERT_EQ(descent(conjugate_by_rotation(sigma, j)), d)
            << sigma.to_string() << " j=" << j;
    }
  }
}

TEST(CycleProperties, DescentBounds) {
  for (int q = 3; q <= 7; ++q) {
    for (const auto& sigma : all_cycles(q)) {
      const int d = descent(sigma);
      EXPECT_GE(d, 1);
      EXPECT_LE(d, q - 2) << sigma.to_string();
    }
  }
}

TEST(CycleProperties, DescentOneIffRotation) {
  for (int q = 2; q <= 7; ++q) {
    int rotations = 0;
    for (const auto& sigma : all_cycles(q)) {
      EXPECT_EQ(descent(sigma) == 1, is_rotation_cycle(sigma))
          << sigma.to_string();
      if (is_rotation_cycle(sigma)) ++rotations;
    }
    int totient = 0;
    for (int p = 1; p <= q; ++p)
      if (std::gcd(p, q) == 1) ++totient;
    EXPECT_EQ(rotations, totient);
  }
}

TEST(CycleProperties, SymmetryDividesQAndIsTypeInvariant) {
  for (int q = 2; q <= 7; ++q) {
    for (const auto& type : enumerate_types(q)) {
      EXPECT_EQ(q % type.symmetry, 0);
      for (const auto& rep : type.representatives)
        EXPECT_EQ(symmetry_order(rep), type.symmetry);
    }
  }
}

TEST(CycleProperties, SymmetryDividesDescentMinusOne) {
  for (int q = 3; q <= 7; ++q) {
    for (const auto& sigma : all_cycles(q)) {
      const int d = descent(sigma);
      if (d >= 2) EXPECT_EQ((d - 1) % symmetry_order(sigma), 0) << sigma.to_string();
    }
  }
}

TEST(CycleProperties, MultiplicationCycleDescentLaw) {
  for (int p : {5, 7, 11, 13}) {
    for (int d = 2; d < p; ++d) {
      if (!testing::is_primitive_root(d, p)) continue;
      const Cycle sigma = testing::multiplication_cycle(p, d);
      const int expected = (2 * d < p) ? d : d - 1;
      EXPECT_EQ(descent(sigma), expected) << "p=" << p << " d=" << d;
    }
  }
  EXPECT_EQ(testing::multiplication_cycle(7, 3).to_string(), "(1 3 2 6 4 5)");
}

// Recorded for evidence only; no code depends on it.
TEST(CycleProperties, EveryDivisorOccursAsSymmetryOrder) {
  for (int q = 5; q <= 9; ++q) {
    std::set<int> seen;
    for (const auto& type : enumerate_types(q)) seen.insert(type.symmetry);
    for (int s = 1; s <= q; ++s)
      if (q % s == 0) EXPECT_TRUE(seen.contains(s)) << "q=" << q << " s=" << s;
  }
}

}  // namespace
}  // namespace cyclic
