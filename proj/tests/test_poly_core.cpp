#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace germ_contact;
using namespace testing_helpers;

TEST(Rational, CanonicalAfterOperations)
{
  Rational a = make_rational(6, -4);
  EXPECT_EQ(a.get_num(), -3);
  EXPECT_EQ(a.get_den(), 2);
  Rational b = a * make_rational(4, 6);
  EXPECT_EQ(b, make_rational(-1, 1));
  EXPECT_EQ(parse_rational("10/4"), make_rational(5, 2));
}

TEST(ExtendedRational, OrderingAndArithmetic)
{
  ExtendedRational inf = ExtendedRational::infinity();
  EXPECT_LT(ExtendedRational(3), inf);
  EXPECT_EQ(min(inf, ExtendedRational(4)), ExtendedRational(4));
  EXPECT_EQ((ExtendedRational(3) * Rational(2)).to_string(), "6");
  EXPECT_EQ((inf * Rational(2)).to_string(), "inf");
  EXPECT_EQ(ExtendedRational::parse("7/2").value(), make_rational(7, 2));
  EXPECT_EQ(pow(ExtendedRational(3), 2), ExtendedRational(9));
}

TEST(LowestOrder, Examples)
{
  EXPECT_EQ(poly(3, "z1^3 - z2*z3").lowest_order(), 2);
  EXPECT_EQ(poly(1, "z1^3").lowest_order(), 3);
  EXPECT_FALSE(Polynomial(3).lowest_order().has_value());
}

TEST(LowestOrder, AddsUnderProducts)
{
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial p = random_poly(3, 6, 4, rng), q = random_poly(3, 6, 4, rng);
    if (p.is_zero() || q.is_zero())
      continue;
    EXPECT_EQ(*(p * q).lowest_order(), *p.lowest_order() + *q.lowest_order());
  }
}

TEST(Substitute, SliceOfTheBaseIdeal)
{
  Polynomial f = poly(3, "z1^3 - z2*z3");
  std::vector<Polynomial> images{var(3, 0), var(3, 1), poly(3, "-z1 - z2")};
  EXPECT_EQ(substitute(f, images), poly(3, "z1^3 + z1*z2 + z2^2"));
}

TEST(Substitute, IdentityAndArityMismatch)
{
  Polynomial f = poly(3, "z1^3 - z2*z3 + 1/2*z1");
  EXPECT_EQ(substitute(f, {var(3, 0), var(3, 1), var(3, 2)}), f);
  EXPECT_THROW(substitute(f, {var(3, 0), var(3, 1)}), std::invalid_argument);
}

TEST(Substitute, RingHomomorphismAndPointEvaluation)
{
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> pt(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    Polynomial p = random_poly(3, 5, 4, rng), q = random_poly(3, 5, 4, rng);
    std::vector<Polynomial> images;
    for (int v = 0; v < 3; ++v)
      images.push_back(random_poly(2, 3, 3, rng));
    EXPECT_EQ(substitute(p * q, images), substitute(p, images) * substitute(q, images));
    EXPECT_EQ(substitute(p + q, images), substitute(p, images) + substitute(q, images));
    std::vector<Rational> x{Rational(pt(rng)), Rational(pt(rng))};
    std::vector<Rational> y;
    for (const auto& im : images)
      y.push_back(im.evaluate(x));
    EXPECT_EQ(substitute(p, images).evaluate(x), p.evaluate(y));
  }
}

TEST(ChangeCoordinates, SwapIdentityAndInverse)
{
  IdealPresentation i = ideal(2, "z1");
  RationalMatrix swap{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
  EXPECT_EQ(change_coordinates(i, swap)[0], var(2, 1));
  IdealPresentation base = ideal(3, "z1^3 - z2*z3, z2^2");
  EXPECT_EQ(change_coordinates(base, identity_matrix(3)), base);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 5; ++k) {
    RationalMatrix m = random_invertible(3, rng);
    EXPECT_EQ(change_coordinates(change_coordinates(base, m), inverse(m)), base);
  }
  RationalMatrix singular{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  EXPECT_THROW(change_coordinates(i, singular), std::domain_error);
}

TEST(ChangeCoordinates, WSubstitutionOfTheBaseIdeal)
{
  // z3 = w3 - w1 - w2 turns z1^3 - z2*z3 into w1^3 + w1*w2 + w2^2 - w2*w3
  RationalMatrix m{{Rational(1), Rational(0), Rational(0)},
                   {Rational(0), Rational(1), Rational(0)},
                   {Rational(-1), Rational(-1), Rational(1)}};
  IdealPresentation w = change_coordinates(ideal(3, "z1^3 - z2*z3, z2^2"), m);
  EXPECT_EQ(w[0], poly(3, "z1^3 + z1*z2 + z2^2 - z2*z3"));
}

TEST(Adjoin, Examples)
{
  IdealPresentation base = ideal(3, "z1^3 - z2*z3, z2^2");
  EXPECT_EQ(adjoin(base, {LinearForm::coordinate(3, 2)}), ideal(3, "z1^3 - z2*z3, z2^2, z3"));
  EXPECT_EQ(adjoin(base, {}), base);
  LinearForm a({Rational(1), Rational(2), Rational(0)}), b = LinearForm::coordinate(3, 0);
  EXPECT_EQ(adjoin(adjoin(base, {a}), {b}), adjoin(base, {a, b}));
  EXPECT_THROW(adjoin(base, {LinearForm(std::vector<Rational>(3, Rational(0)))}), std::invalid_argument);
}

TEST(IdealPresentation, RejectsConstantTerms)
{
  EXPECT_THROW(IdealPresentation(2, {poly(2, "z1") + Polynomial::constant(2, Rational(1))}), std::invalid_argument);
  EXPECT_THROW(IdealPresentation(2, {}), std::invalid_argument);
}

TEST(UPoly, GcdResultantSquarefree)
{
  QPoly x = QPoly::x(RationalField{});
  QPoly one = QPoly::constant(RationalField{}, 1);
  QPoly a = (x - one) * (x - one) * (x + one);
  QPoly b = (x - one) * (x + one + one);
  EXPECT_EQ(gcd(a, b), x - one);
  EXPECT_EQ(resultant(x - one, x + one), Rational(2));
  auto sq = squarefree_decomposition(a);
  ASSERT_EQ(sq.size(), 2u);
}

TEST(LinearRank, CountsIndependentLinearParts)
{
  EXPECT_EQ(linear_rank(ideal(3, "z1 + z2^2, 2*z1 + z3^3, z2")), 2);
  EXPECT_EQ(linear_rank(ideal(3, "z1^2")), 0);
}
