#include <gtest/gtest.h>

#include "property_checks.hpp"

using namespace germ_contact;
using namespace testing_helpers;

TEST(Properties, Type1InvariantUnderLinearCoordinateChange)
{
  PropertyOutcome r = coordinate_invariance(25, 21);
  EXPECT_TRUE(r.ok) << r.detail;
  EXPECT_EQ(r.checked, 75);
}

TEST(Properties, ContactRatioInvariantUnderReparameterization)
{
  PropertyOutcome r = reparameterization_invariance(100, 22);
  EXPECT_TRUE(r.ok) << r.detail;
}

TEST(Properties, PuiseuxBranchesSatisfyTheirCurve)
{
  PropertyOutcome r = puiseux_residuals(30, 23);
  EXPECT_TRUE(r.ok) << r.detail;
  EXPECT_GT(r.checked, 35);
}

TEST(Properties, ColengthAgreesWithStaircaseCount)
{
  PropertyOutcome r = staircase_colength(50, 24);
  EXPECT_TRUE(r.ok) << r.detail;
}

TEST(Properties, GenericValueStableAcrossSeeds)
{
  PropertyOutcome r = seed_stability({family_ideal(3, 2), family_ideal(4, 3)}, {1, 7, 12345});
  EXPECT_TRUE(r.ok) << r.detail;
}

TEST(Properties, AddingFormsNeverIncreasesType)
{
  std::mt19937_64 rng(25);
  std::uniform_int_distribution<int> coef(-5, 5);
  IdealPresentation base = family_ideal(3, 2);
  for (int k = 0; k < 8; ++k) {
    LinearForm w({Rational(coef(rng)), Rational(coef(rng)), Rational(1)});
    LinearForm u({Rational(1), Rational(coef(rng)), Rational(0)});
    EXPECT_LE(type1(adjoin(base, {w, u})).upper, type1(adjoin(base, {w})).upper);
  }
}
