#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace germ_contact;
using namespace testing_helpers;

TEST(Mult, Examples)
{
  EXPECT_EQ(mult(ideal(2, "z1^3, z2^2")).value, 6);
  EXPECT_EQ(mult(ideal(2, "z1, z2")).value, 1);
  EXPECT_EQ(mult(ideal(3, "z1^3 - z2*z3, z2^2, z3")).value, 6);
}

TEST(Mult, NotFinite)
{
  MultiplicityResult axis = mult(ideal(3, "z1^3 - z2*z3, z2^2"));
  EXPECT_FALSE(axis.finite());
  EXPECT_TRUE(axis.proven_infinite);
  MultiplicityResult curve = mult(ideal(3, "z1 - z2, z2 - z3"), 8);
  EXPECT_FALSE(curve.finite());
  EXPECT_FALSE(curve.proven_infinite);
  EXPECT_EQ(curve.to_string(), "NOT_FINITE");
}

TEST(MultMonomial, Examples)
{
  EXPECT_EQ(mult_monomial(ideal(2, "z1^3, z2^2")).value, 6);
  for (int m = 1; m <= 5; ++m)
    EXPECT_EQ(mult_monomial(ideal(2, "z1^" + std::to_string(m) + ", z2^" + std::to_string(m))).value, m * m);
  EXPECT_FALSE(mult_monomial(ideal(2, "z1^2")).finite());
  EXPECT_THROW(mult_monomial(ideal(2, "z1 + z2")), std::invalid_argument);
}

TEST(Mult, PlaneIntersectionNumber)
{
  // for two plane curves the colength is the intersection number, a sum over branches
  std::mt19937_64 rng(2);
  int checked = 0;
  for (int trial = 0; trial < 40 && checked < 12; ++trial) {
    Polynomial f = random_poly(2, 5, 4, rng), g = random_poly(2, 5, 4, rng);
    if (f.is_zero() || g.is_zero())
      continue;
    IdealPresentation i(2, {f, g});
    MultiplicityResult m = mult(i);
    long sum = 0;
    bool common = false;
    for (const auto& b : branch_decompose(f, 64)) {
      auto o = pullback_order(g, b.curve());
      if (!o) {
        common = true;
        break;
      }
      sum += static_cast<long>(b.conjugates) * b.multiplicity * *o;
    }
    if (common || !m.finite())
      continue;
    EXPECT_EQ(*m.value, sum) << i.to_string();
    ++checked;
  }
  EXPECT_GE(checked, 8);
}

TEST(Mult, MonotoneUnderAddingGenerators)
{
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 15; ++trial) {
    IdealPresentation i = ideal(2, "z1^4, z2^3");
    Polynomial extra = random_poly(2, 4, 3, rng);
    if (extra.is_zero())
      continue;
    std::vector<Polynomial> gens = i.generators();
    gens.push_back(extra);
    EXPECT_LE(*mult(IdealPresentation(2, gens)).value, *mult(i).value);
  }
}

TEST(Mult, SemicontinuityOnTheBaseFamily)
{
  // generic slices have colength at most that of the special slice z3 = 0
  IdealPresentation base = ideal(3, "z1^3 - z2*z3, z2^2");
  long special = *mult(adjoin(base, {LinearForm::coordinate(3, 2)})).value;
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<int> c(-50, 50);
  for (int k = 0; k < 5; ++k) {
    LinearForm w({Rational(c(rng)), Rational(c(rng)), Rational(1 + std::abs(c(rng)))});
    MultiplicityResult m = mult(adjoin(base, {w}));
    ASSERT_TRUE(m.finite());
    EXPECT_LE(*m.value, special);
  }
}

TEST(CheckMultBounds, Examples)
{
  auto r = check_mult_bounds(ideal(3, "z1^3 - z2*z3, z2^2, z3"), 1);
  EXPECT_EQ(r.t1.upper, ExtendedRational(3));
  EXPECT_EQ(*r.multiplicity.value, 6);
  EXPECT_EQ(r.overall(), Verdict::Pass);
  EXPECT_EQ(check_mult_bounds(ideal(3, "z1, z2, z3"), 3).overall(), Verdict::Pass);
  for (int k = 1; k <= 5; ++k) {
    auto e = check_mult_bounds(ideal(2, "z1^" + std::to_string(k) + ", z2"), 1);
    EXPECT_EQ(e.t1.upper, ExtendedRational(k));
    EXPECT_EQ(*e.multiplicity.value, k);
    EXPECT_EQ(e.overall(), Verdict::Pass);
  }
  EXPECT_THROW(check_mult_bounds(ideal(2, "z1^2, z2^2"), 1), std::invalid_argument);
}
