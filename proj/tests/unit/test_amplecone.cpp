#include <gtest/gtest.h>

#include "kstab/amplecone.hpp"
#include "kstab/error.hpp"

using kstab::BundleParams;
using kstab::Rational;

TEST(AmpleCone, Examples) {
  EXPECT_TRUE(kstab::is_ample({1, 3, 3}));
  EXPECT_FALSE(kstab::is_ample({0, 1, 1}));
  EXPECT_FALSE(kstab::is_ample({2, 2, 5}));
  EXPECT_FALSE(kstab::is_ample({3, 5, 3}));
  EXPECT_FALSE(kstab::is_ample({-1, 2, 2}));
  EXPECT_TRUE(kstab::is_ample({1, 2, 100}));
}

TEST(AmpleCone, Normalize) {
  EXPECT_EQ(kstab::normalize({1, 2, 3}), (kstab::NormalizedClass{Rational(1, 5), Rational(2, 5)}));
  EXPECT_EQ(kstab::normalize({1, 3, 3}), (kstab::NormalizedClass{Rational(1, 6), Rational(1, 2)}));
  EXPECT_THROW(kstab::normalize({1, 0, 0}), kstab::DegenerateScaling);
  EXPECT_THROW(kstab::normalize({1, -2, 1}), kstab::DegenerateScaling);
}

TEST(AmpleCone, NormalizeInvariances) {
  for (std::int64_t a = 1; a < 6; ++a) {
    for (std::int64_t b = a + 1; b < 9; ++b) {
      for (std::int64_t c = a + 1; c < 9; ++c) {
        const BundleParams p{a, b, c};
        const auto n = kstab::normalize(p);
        EXPECT_EQ(kstab::normalize({3 * a, 3 * b, 3 * c}), n);
        EXPECT_EQ(kstab::normalize({a, c, b}), n);
        EXPECT_GT(n.a, Rational(0));
        EXPECT_LT(n.a, n.b);
        EXPECT_LE(n.b, Rational(1, 2));
      }
    }
  }
}

TEST(AmpleCone, MomentPolytope) {
  const auto seg = kstab::moment_polytope({1, 3, 3});
  EXPECT_EQ(seg.base, (kstab::Weight{Rational(0), Rational(6)}));
  EXPECT_EQ(seg.lo, Rational(-3));
  EXPECT_EQ(seg.hi, Rational(-1));
  EXPECT_EQ(seg.length(), Rational(2));
  EXPECT_EQ(kstab::moment_polytope({1, 2, 3}).lo, Rational(-2));
  EXPECT_EQ(kstab::moment_polytope({-1, 2, 3}).hi, Rational(0));
  EXPECT_THROW(kstab::moment_polytope({5, 1, 1}), kstab::EmptyPolytope);
}

TEST(AmpleCone, RelationVector) {
  const kstab::DivisorVector r = kstab::relation_vector();
  EXPECT_EQ(r, (kstab::DivisorVector{-1, -1, 1, 1}));
  EXPECT_EQ(kstab::reduce(r), (BundleParams{0, 0, 0}));
  for (std::int64_t a = -3; a <= 3; ++a) {
    const BundleParams p{a, 2 - a, 5 + a};
    EXPECT_EQ(kstab::to_divisor(p), (kstab::DivisorVector{-a, 0, 2 - a, 5 + a}));
    EXPECT_EQ(kstab::reduce(kstab::to_divisor(p)), p);
    EXPECT_EQ(kstab::reduce(kstab::to_divisor(p) + (a + 4) * r), p);
  }
}

TEST(AmpleCone, ReduceEliminatesClub) {
  EXPECT_EQ(kstab::reduce({0, 1, 0, 0}), (BundleParams{1, 1, 1}));
  EXPECT_EQ(kstab::reduce({2, 0, 3, 4}), (BundleParams{-2, 3, 4}));
}

TEST(AmpleCone, WallDistance) {
  EXPECT_EQ(kstab::wall_distance({1, 2, 3}), Rational(1, 5));
  EXPECT_EQ(kstab::wall_distance({1, 100, 100}), Rational(0));
  EXPECT_EQ(kstab::wall_distance({1, 3, 7}), Rational(1, 10));
}

TEST(AmpleCone, Verdicts) {
  const auto report = kstab::kstability_verdict({1, 100, 100});
  EXPECT_EQ(report.a, Rational(1, 200));
  EXPECT_EQ(report.b, Rational(1, 2));
  EXPECT_EQ(report.value, Rational::parse("827966707739116803/204800000000000000000"));
  EXPECT_EQ(report.verdict, kstab::Verdict::k_stable);
  EXPECT_EQ(kstab::kstability_verdict({1, 3, 3}).value, Rational(707, 233280));
  EXPECT_THROW(kstab::kstability_verdict({2, 2, 5}), kstab::NotAmple);
  EXPECT_THROW(kstab::kstability_verdict({0, 1, 1}), kstab::NotAmple);
}
