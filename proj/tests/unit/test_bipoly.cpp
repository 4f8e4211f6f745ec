#include <gtest/gtest.h>

#include "generators.hpp"
#include "kstab/bipoly.hpp"
#include "kstab/criterion.hpp"
#include "kstab/error.hpp"
#include "kstab/rootdata.hpp"

using kstab::BiPoly;
using kstab::IntegrandWeight;
using kstab::LinearFactor;
using kstab::Rational;
using kstab::UniPoly;

namespace {

const BiPoly a = BiPoly::var_a();
const BiPoly b = BiPoly::var_b();

BiPoly k(long num, long den = 1) { return BiPoly::constant(Rational(num, den)); }

}  // namespace

TEST(BiPoly, NoZeroCoefficientsStored) {
  const BiPoly f = a * b - b * a;
  EXPECT_TRUE(f.is_zero());
  EXPECT_TRUE(f.terms().empty());
  EXPECT_EQ(BiPoly({{{1, 2}, Rational(0)}, {{0, 0}, Rational(3)}}).terms().size(), 1u);
  EXPECT_EQ(BiPoly().total_degree(), -1);
}

TEST(BiPoly, Evaluation) {
  EXPECT_EQ((a * b)(Rational(2), Rational(3)), Rational(6));
  EXPECT_EQ((pow(a, 3) - k(2) * b)(Rational(1, 2), Rational(-1)), Rational(17, 8));
}

TEST(BiPoly, RingAxioms) {
  kstab::testing::Generator gen(11);
  for (int n = 0; n < 60; ++n) {
    const BiPoly f = gen.bipoly(), g = gen.bipoly(), h = gen.bipoly();
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_EQ(f * g, g * f);
    EXPECT_TRUE((f - f).is_zero());
  }
}

TEST(BiPoly, ComposeAgreesWithPointEvaluation) {
  kstab::testing::Generator gen(12);
  for (int n = 0; n < 40; ++n) {
    const BiPoly f = gen.bipoly(), x = gen.bipoly(2, 3), y = gen.bipoly(2, 3);
    const Rational s = gen.rational(), t = gen.rational();
    EXPECT_EQ(compose(f, x, y)(s, t), f(x(s, t), y(s, t)));
    const UniPoly p = gen.unipoly();
    EXPECT_EQ(compose(p, x)(s, t), p(x(s, t)));
  }
}

TEST(SymbolicIntegral, IntegralOfP) {
  const BiPoly expected =
      (pow(b, 4) - pow(a, 4) - k(2) * (pow(b, 3) - pow(a, 3)) + pow(b, 2) - pow(a, 2)) * Rational(1, 4);
  EXPECT_EQ(kstab::symbolic_integral_ab(kstab::stated_P(), IntegrandWeight::unit), expected);
}

TEST(SymbolicIntegral, IntegralOfTP) {
  const BiPoly expected =
      (k(-24) * (pow(b, 5) - pow(a, 5)) + k(45) * (pow(b, 4) - pow(a, 4)) - k(20) * (pow(b, 3) - pow(a, 3))) *
      Rational(1, 120);
  EXPECT_EQ(kstab::symbolic_integral_ab(kstab::stated_P(), IntegrandWeight::linear), expected);
}

TEST(SymbolicIntegral, ZeroIntegrand) {
  EXPECT_TRUE(kstab::symbolic_integral_ab(UniPoly(), IntegrandWeight::unit).is_zero());
  EXPECT_TRUE(kstab::symbolic_integral_ab(UniPoly(), IntegrandWeight::linear).is_zero());
}

TEST(SymbolicIntegral, AgreesWithDefiniteIntegral) {
  kstab::testing::Generator gen(13);
  for (int n = 0; n < 100; ++n) {
    const UniPoly p = gen.unipoly(6);
    const Rational s = gen.rational(), u = gen.rational();
    // [-b, -a] = [s, u]
    const Rational a0 = -u, b0 = -s;
    EXPECT_EQ(kstab::symbolic_integral_ab(p, IntegrandWeight::unit)(a0, b0), kstab::definite_integral(p, s, u));
    EXPECT_EQ(kstab::symbolic_integral_ab(p, IntegrandWeight::linear)(a0, b0),
              kstab::definite_integral(p * UniPoly::variable(), s, u));
  }
}

TEST(DivideLinearFactor, DifferenceOfSquares) {
  EXPECT_EQ(kstab::divide_linear_factor(pow(b, 2) - pow(a, 2), LinearFactor::b_minus_a()), b + a);
}

TEST(DivideLinearFactor, CriterionByDiagonal) {
  const BiPoly& C = kstab::standard_criterion().C();
  const BiPoly C_tilde = kstab::divide_linear_factor(C, LinearFactor::b_minus_a());
  EXPECT_EQ(C_tilde * LinearFactor::b_minus_a().as_poly(), C);
  EXPECT_EQ(kstab::substitute_diagonal(C_tilde), kstab::displayed::C_tilde_on_diagonal());
}

TEST(DivideLinearFactor, ReportsRemainder) {
  try {
    kstab::divide_linear_factor(a * b + k(1), LinearFactor::a());
    FAIL() << "expected NotDivisible";
  } catch (const kstab::NotDivisible& e) {
    EXPECT_EQ(e.remainder(), "1");
  }
  EXPECT_THROW(kstab::divide_linear_factor(pow(b, 2) + a, LinearFactor::b_minus_a()), kstab::NotDivisible);
  EXPECT_THROW(kstab::divide_linear_factor(k(1), LinearFactor::one_minus_2b()), kstab::NotDivisible);
}

TEST(DivideLinearFactor, ExactQuotientOfProducts) {
  kstab::testing::Generator gen(14);
  const LinearFactor factors[] = {LinearFactor::b_minus_a(),   LinearFactor::a(),
                                  LinearFactor::b(),           LinearFactor::one_minus_b(),
                                  LinearFactor::one_minus_2a(), LinearFactor::one_minus_2b()};
  for (int n = 0; n < 40; ++n) {
    const BiPoly f = gen.bipoly(5, 8);
    for (const auto& factor : factors) {
      EXPECT_EQ(kstab::divide_linear_factor(f * factor.as_poly(), factor), f) << factor.str();
    }
  }
}

TEST(SubstituteLine, CriterionOnBHalf) {
  EXPECT_EQ(kstab::substitute_b(kstab::standard_criterion().C(), Rational(1, 2)), kstab::displayed::C_on_b_half());
}

TEST(SubstituteLine, CriterionOnAZero) {
  EXPECT_EQ(kstab::substitute_a(kstab::standard_criterion().C(), Rational(0)), kstab::displayed::C_on_a_zero());
}

TEST(SubstituteLine, Diagonal) {
  EXPECT_EQ(kstab::substitute_diagonal(a + b), (UniPoly{0, 2}));
}

TEST(SubstituteLine, AgreesWithEvaluation) {
  kstab::testing::Generator gen(15);
  for (int n = 0; n < 50; ++n) {
    const BiPoly f = gen.bipoly(6, 10);
    const Rational x = gen.rational(), y = gen.rational();
    EXPECT_EQ(kstab::substitute_b(f, y)(x), f(x, y));
    EXPECT_EQ(kstab::substitute_a(f, x)(y), f(x, y));
    EXPECT_EQ(kstab::substitute_diagonal(f)(x), f(x, x));
  }
}
