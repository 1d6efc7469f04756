#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"

using namespace germ_contact;
using namespace testing_helpers;

namespace {

CurveGerm curve(std::vector<std::vector<long>> comps)
{
  std::vector<std::vector<Rational>> c;
  for (const auto& v : comps) {
    std::vector<Rational> r;
    for (long x : v)
      r.emplace_back(x);
    c.push_back(r);
  }
  return polynomial_curve(c);
}

}  // namespace

TEST(CurveOrder, Examples)
{
  EXPECT_EQ(curve_order(curve({{0, 1}, {0, 0, -1}})), 1);
  EXPECT_EQ(curve_order(curve({{0, 0, 1}, {0, 0, 0, 1}})), 2);
  EXPECT_EQ(curve_order(curve({{0, 0, 0, 0, 0, 1}})), 5);
  EXPECT_THROW(curve_order(curve({{0}, {}})), TruncationError);
}

TEST(PullbackOrder, Examples)
{
  CurveGerm g = curve({{0, 1}, {0, 0, -1}});
  EXPECT_EQ(pullback_order(poly(2, "z2^2"), g), 4);
  EXPECT_FALSE(pullback_order(poly(2, "z1^3 + z1*z2"), g).has_value());
  for (int k = 1; k <= 5; ++k) {
    std::vector<long> c(static_cast<std::size_t>(k) + 1, 0);
    c.back() = 1;
    EXPECT_EQ(pullback_order(poly(2, "z1"), curve({c, {}})), k);
  }
  EXPECT_THROW(pullback_order(poly(3, "z1"), g), std::invalid_argument);
}

TEST(IdealOrderOnCurve, Examples)
{
  CurveGerm g = curve({{0, 1}, {0, 0, -1}});
  EXPECT_EQ(ideal_order_on_curve(ideal(2, "z1^3 + z1*z2, z2^2"), g), 4);
  EXPECT_EQ(ideal_order_on_curve(ideal(3, "z1, z2, z3"), curve({{0, 0, 0, 2}, {0, 0, 0, 0, 1}, {}})), 3);
}

TEST(IdealOrderOnCurve, RandomCombinationsNeverGoBelow)
{
  std::mt19937_64 rng(8);
  int equal = 0, trials = 0;
  for (int trial = 0; trial < 60; ++trial) {
    IdealPresentation i(3, {random_poly(3, 5, 3, rng), random_poly(3, 5, 3, rng)});
    CurveGerm c = random_curve(3, 3, rng);
    auto base = ideal_order_on_curve(i, c);
    if (!base)
      continue;
    Polynomial h1 = random_poly(3, 2, 2, rng) + Polynomial::constant(3, Rational(1 + trial % 3));
    Polynomial h2 = random_poly(3, 2, 2, rng) + Polynomial::constant(3, Rational(2 + trial % 5));
    auto comb = pullback_order(h1 * i[0] + h2 * i[1], c);
    ++trials;
    if (!comb)
      continue;
    EXPECT_GE(*comb, *base);
    equal += *comb == *base;
  }
  EXPECT_GE(10 * equal, 9 * trials);
}

TEST(PullbackOrder, CompositionBoundAndMultiplicativity)
{
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial g = random_poly(3, 5, 3, rng), h = random_poly(3, 5, 3, rng);
    CurveGerm c = random_curve(3, 3, rng);
    auto og = pullback_order(g, c), oh = pullback_order(h, c);
    if (!og || !oh)
      continue;
    EXPECT_GE(*og, *g.lowest_order() * curve_order(c));
    EXPECT_EQ(pullback_order(g * h, c), *og + *oh);
  }
}

TEST(EnumerateCurves, Counts)
{
  auto one = enumerate_curves(1, 1, {Rational(0), Rational(1)});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].to_string(), "(t)");
  auto all = enumerate_curves(2, 2, height_pool(1));
  EXPECT_EQ(all.size(), 80u);
  std::set<std::string> distinct;
  for (const auto& c : all)
    distinct.insert(c.to_string());
  EXPECT_EQ(distinct.size(), all.size());
  EXPECT_THROW(enumerate_curves(1, 1, {Rational(1), Rational(2)}), std::invalid_argument);
}

TEST(SearchLowerBound, Examples)
{
  auto r = type1_search_lower_bound(ideal(2, "z1^3, z2^2"), SearchParams{3, 1});
  EXPECT_EQ(r.ratio, ExtendedRational(3));
  EXPECT_EQ(*ideal_order_on_curve(ideal(2, "z1^3, z2^2"), r.witness), 3 * curve_order(r.witness));
  EXPECT_EQ(type1_search_lower_bound(ideal(2, "z1, z2"), SearchParams{}).ratio, ExtendedRational(1));
  auto base = type1_search_lower_bound(ideal(3, "z1^3 - z2*z3, z2^2"), SearchParams{2, 1});
  EXPECT_GE(base.ratio, ExtendedRational(3));
}

TEST(SearchLowerBound, CurveInsideZeroSet)
{
  auto r = type1_search_lower_bound(ideal(3, "z1^3 - z2*z3, z2^2"), SearchParams{3, 1});
  // (t, 0, 0) has order 3 but (0, 0, t) lies in the zero set
  EXPECT_TRUE(r.ratio.is_infinite());
  EXPECT_FALSE(ideal_order_on_curve(ideal(3, "z1^3 - z2*z3, z2^2"), r.witness).has_value());
}

TEST(SearchLowerBound, NeverExceedsExactValue)
{
  for (const char* gens : {"z1^3, z2^2", "z1^3 + z1*z2, z2^2", "z1^2 - z2^3, z1*z2", "z1^4 + z2^5, z1*z2^2"}) {
    IdealPresentation i = ideal(2, gens);
    InvariantReport exact = type1(i);
    ASSERT_TRUE(exact.is_exact()) << gens;
    EXPECT_LE(type1_search_lower_bound(i, SearchParams{3, 1}).ratio, exact.upper) << gens;
  }
}

TEST(SearchLowerBound, ReachesExactValueOnSmallIdeals)
{
  for (const char* gens : {"z1^3, z2^2", "z1^3 + z1*z2, z2^2", "z1^4, z2"}) {
    IdealPresentation i = ideal(2, gens);
    EXPECT_EQ(type1_search_lower_bound(i, SearchParams{3, 1}).ratio, type1(i).upper) << gens;
  }
}
