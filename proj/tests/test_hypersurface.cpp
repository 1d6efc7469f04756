#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace germ_contact;
using namespace testing_helpers;

namespace {

RigidHypersurface hyper(const std::string& text) { return parse_hypersurface(text).to_rigid(); }

const char* const main_example = "ring z1..z4; hyper = Re(z4) + abs2(z1^3 - z3*z2) + abs2(z2^2);";

}  // namespace

TEST(AssociatedIdeal, Examples)
{
  EXPECT_EQ(associated_ideal(hyper(main_example)), ideal(4, "z4, z1^3 - z3*z2, z2^2"));
  EXPECT_EQ(associated_ideal(hyper("ring z1..z2; hyper = Re(z2);")), ideal(2, "z2"));
  EXPECT_EQ(associated_ideal(hyper("ring z1..z2; hyper = Re(z2) + abs2(z1);")), ideal(2, "z2, z1"));
  EXPECT_THROW(RigidHypersurface(2, poly(2, "z1^2"), {}), std::invalid_argument);
}

TEST(Delta1, Examples)
{
  for (int k = 1; k <= 5; ++k) {
    auto m = hyper("ring z1..z2; hyper = Re(z2) + abs2(z1^" + std::to_string(k) + ");");
    EXPECT_EQ(delta1(m).upper, ExtendedRational(2 * k));
  }
  EXPECT_TRUE(delta1(hyper(main_example)).upper.is_infinite());
}

TEST(DeltaQ, MainExample)
{
  auto m = hyper(main_example);
  InvariantReport d = deltaq(m, 2, SamplePlan{});
  EXPECT_EQ(d.status, Status::Exact);
  EXPECT_EQ(d.upper, ExtendedRational(6));
  EXPECT_EQ(deltaq_generic(m, 2, SamplePlan{}).upper, ExtendedRational(8));
  auto two = hyper("ring z1..z2; hyper = Re(z2) + abs2(z1^3);");
  EXPECT_EQ(deltaq(two, 1, SamplePlan{}).upper, delta1(two).upper);
}

TEST(DeltaQ, NonIncreasingInQ)
{
  auto m = hyper("ring z1..z4; hyper = Re(z4) + abs2(z1^3 - z3*z2) + abs2(z2^2) + abs2(z3^5);");
  ExtendedRational prev = ExtendedRational::infinity();
  for (int q = 1; q <= 3; ++q) {
    ExtendedRational v = deltaq(m, q, SamplePlan{}).upper;
    EXPECT_LE(v, prev);
    prev = v;
  }
}

TEST(CatlinqHyper, MainExample)
{
  InvariantReport d = catlinq_hyper(hyper(main_example), 2, SamplePlan{});
  EXPECT_EQ(d.upper, ExtendedRational(8));
  ASSERT_EQ(d.related.size(), 1u);
  EXPECT_EQ(d.related[0].status, Status::LowerBound);
  EXPECT_EQ(d.related[0].lower, ExtendedRational(8));
  for (const auto& s : d.related[0].samples)
    EXPECT_LE(s.lower * Rational(2), d.upper);
  EXPECT_EQ(catlinq_hyper(hyper("ring z1..z2; hyper = Re(z2) + abs2(z1^2);"), 1, SamplePlan{}).upper,
            ExtendedRational(4));
}

TEST(Delta1, AlwaysEvenForIntegerTypes)
{
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    Polynomial f = random_poly(3, 5, 3, rng), g = random_poly(3, 5, 3, rng);
    RigidHypersurface m(3, var(3, 2) + poly(3, "z1^2"), {f, g});
    InvariantReport d = delta1(m);
    InvariantReport t = type1(associated_ideal(m));
    if (t.upper.is_infinite()) {
      EXPECT_TRUE(d.upper.is_infinite());
    } else {
      EXPECT_EQ(d.upper, t.upper * Rational(2));
    }
  }
}
