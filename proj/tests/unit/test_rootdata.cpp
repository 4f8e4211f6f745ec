#include <gtest/gtest.h>

#include "generators.hpp"
#include "kstab/error.hpp"
#include "kstab/rootdata.hpp"

using kstab::PositiveRoot;
using kstab::Rational;
using kstab::UniPoly;
using kstab::Weight;
namespace weights = kstab::weights;

TEST(PairingRatio, DisplayedValues) {
  EXPECT_EQ(kstab::pairing_ratio(PositiveRoot::alpha2, weights::fundamental2()), Rational(1));
  EXPECT_EQ(kstab::pairing_ratio(PositiveRoot::alpha1_plus_alpha2, weights::rho()), Rational(1));
  EXPECT_EQ(kstab::pairing_ratio(PositiveRoot::alpha1, weights::alpha2()), Rational(-1));
  const Weight w{Rational(3, 7), Rational(-2, 5)};
  EXPECT_EQ(kstab::pairing_ratio(PositiveRoot::alpha1, w), w.x1);
  EXPECT_EQ(kstab::pairing_ratio(PositiveRoot::alpha2, w), w.x2);
  EXPECT_EQ(kstab::pairing_ratio(PositiveRoot::alpha1_plus_alpha2, w), (w.x1 + w.x2) / Rational(2));
}

TEST(PairingRatio, NormalizedToOneOnRho) {
  for (PositiveRoot root : kstab::kPositiveRoots) EXPECT_EQ(kstab::pairing_ratio(root, weights::rho()), Rational(1));
}

TEST(PairingRatio, Linear) {
  kstab::testing::Generator gen(21);
  for (int n = 0; n < 100; ++n) {
    const Weight u{gen.rational(), gen.rational()}, v{gen.rational(), gen.rational()};
    const Rational s = gen.rational();
    for (PositiveRoot root : kstab::kPositiveRoots) {
      EXPECT_EQ(kstab::pairing_ratio(root, u + v), kstab::pairing_ratio(root, u) + kstab::pairing_ratio(root, v));
      EXPECT_EQ(kstab::pairing_ratio(root, s * u), s * kstab::pairing_ratio(root, u));
    }
  }
}

TEST(PairingRatio, UnknownRoot) {
  EXPECT_THROW(kstab::parse_root("alpha3"), kstab::UnknownRoot);
  EXPECT_EQ(kstab::parse_root("alpha1+alpha2"), PositiveRoot::alpha1_plus_alpha2);
  EXPECT_THROW(kstab::pairing_ratio(static_cast<PositiveRoot>(7), weights::rho()), kstab::UnknownRoot);
}

TEST(Weights, RootRelations) {
  // alpha2 = 2 w2 - w1; rho = w1 + w2 = alpha1 + alpha2.
  EXPECT_EQ(weights::alpha2(), Rational(2) * weights::fundamental2() + Rational(-1) * weights::fundamental1());
  EXPECT_EQ(weights::rho(), weights::alpha1() + weights::alpha2());
  EXPECT_EQ(weights::rho(), weights::fundamental1() + weights::fundamental2());
}

TEST(WeightLine, Values) {
  const auto line = kstab::weight_line();
  EXPECT_EQ(line.at(Rational(0)), weights::chi());
  EXPECT_EQ(line.at(Rational(1)), (Weight{Rational(-1), Rational(3)}));
  EXPECT_EQ(line.at(Rational(-1, 2)), (Weight{Rational(1, 2), Rational(0)}));
  EXPECT_EQ(line.x1, (UniPoly{0, -1}));
  EXPECT_EQ(line.x2, (UniPoly{1, 2}));
}

TEST(BuildP, MatchesStatedP) {
  EXPECT_EQ(kstab::build_P(), (UniPoly{0, -1, -3, -2}).scaled(Rational(1, 2)));
  EXPECT_TRUE(kstab::build_P()(Rational(0)).is_zero());
  EXPECT_TRUE(kstab::stated_P()(Rational(-1)).is_zero());
  EXPECT_TRUE(kstab::build_P()(Rational(-1)).is_zero());
}

TEST(BuildP, FactoredForm) {
  const UniPoly t = UniPoly::variable();
  const UniPoly factored = (-t) * UniPoly{1, 2} * UniPoly{1, 1} * Rational(1, 2);
  EXPECT_EQ(factored, kstab::build_P());
}

TEST(StatedQ, Values) {
  const UniPoly Q = kstab::stated_Q();
  EXPECT_EQ(Q(Rational(0)), Rational(1, 2));
  EXPECT_EQ(Q(Rational(1)), Rational(-1));
  EXPECT_EQ(Q(Rational(-1, 2)), Rational(1, 8));
}
