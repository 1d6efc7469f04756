#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace germ_contact;
using namespace testing_helpers;

namespace {
const IdealPresentation base = ideal(3, "z1^3 - z2*z3, z2^2");
}

TEST(EliminateLinear, Examples)
{
  LinearElimination a = eliminate_linear(ideal(3, "z1^3 - z2*z3, z2^2, z3"));
  EXPECT_EQ(a.kept, (std::vector<int>{0, 1}));
  EXPECT_EQ(*a.reduced_ideal(), ideal(2, "z1^3, z2^2"));

  LinearElimination b = eliminate_linear(ideal(2, "z1, z2"));
  EXPECT_TRUE(b.kept.empty());
  EXPECT_FALSE(b.reduced_ideal().has_value());
  EXPECT_EQ(type1(ideal(2, "z1, z2")).upper, ExtendedRational(1));

  LinearElimination c = eliminate_linear(ideal(3, "z1^3 - z2*z3, z2^2, z3 + z1 + z2"));
  EXPECT_EQ(*c.reduced_ideal(), ideal(2, "z1^3 + z1*z2 + z2^2, z2^2"));

  EXPECT_THROW(eliminate_linear(base), std::invalid_argument);
}

TEST(EliminateLinear, LiftedCurvesSatisfyTheEliminatedGenerators)
{
  IdealPresentation i = ideal(3, "z1^3 - z2*z3, z2^2, z3 + 2*z1 - z2^2");
  LinearElimination e = eliminate_linear(i);
  ASSERT_EQ(e.nvars(), 2);
  AlgebraicCurveGerm c = e.lift(to_algebraic(polynomial_curve({{Rational(0), Rational(1)}, {Rational(0), Rational(0), Rational(3)}})));
  EXPECT_FALSE(pullback_order(i[2], c).has_value());
}

TEST(Type1, TwoVariableExamples)
{
  InvariantReport a = type1(ideal(2, "z1^3 + z1*z2, z2^2"));
  EXPECT_EQ(a.status, Status::Exact);
  EXPECT_EQ(a.upper, ExtendedRational(4));
  ASSERT_FALSE(a.witnesses.empty());
  EXPECT_EQ(a.witnesses[0].curve.to_string(), "(t, -t^2)");
  EXPECT_EQ(type1(ideal(2, "z1^3, z2^2")).upper, ExtendedRational(3));
}

TEST(Type1, Slices)
{
  auto slice = [](long a, long b, long c) {
    return type1(adjoin(base, {LinearForm({Rational(a), Rational(b), Rational(c)})}));
  };
  EXPECT_EQ(slice(1, 1, 0).upper, ExtendedRational::infinity());
  EXPECT_EQ(slice(1, 1, 1).upper, ExtendedRational(4));
  EXPECT_EQ(slice(0, 1, 1).upper, ExtendedRational(3));
  EXPECT_EQ(slice(1, 1, 0).status, Status::Exact);
}

TEST(Type1, NonRationalTangents)
{
  // y^2 - 2x^2 has a branch over Q(sqrt 2); z1^3 vanishes to order 3 on it
  InvariantReport r = type1(ideal(2, "z2^2 - 2*z1^2, z1^3"));
  EXPECT_EQ(r.upper, ExtendedRational(3));
  EXPECT_TRUE(revalidate(r).empty());
}

TEST(Type1, FractionalValue)
{
  // on the cusp (t^2, t^3) z1^2*z2 has order 7; the axes of z1^2*z2 give 2 and 3
  InvariantReport r = type1(ideal(2, "z2^2 - z1^3, z1^2*z2"));
  EXPECT_EQ(r.status, Status::Exact);
  EXPECT_TRUE(r.upper == ExtendedRational(make_rational(7, 2))) << r.value_string();
  InvariantReport s = type1(ideal(2, "z2^2 - z1^3, z1^4"));
  EXPECT_TRUE(s.upper == ExtendedRational(4)) << s.value_string();
}

TEST(Type1, ThreeVariableBracket)
{
  InvariantReport r = type1(ideal(3, "z1^2 + z2^3, z2^2 + z3^3, z3^2 + z1^3"));
  EXPECT_LE(r.lower, r.upper);
  EXPECT_FALSE(r.upper.is_infinite());
  EXPECT_TRUE(r.status == Status::Bracket || r.status == Status::Exact);
  EXPECT_TRUE(type1(base).upper.is_infinite());
}

TEST(Type1, LiftToMoreVariables)
{
  for (const char* gens : {"z1^3 + z1*z2, z2^2", "z1^2 - z2^3, z1*z2"}) {
    IdealPresentation i2 = ideal(2, gens);
    auto t = type1(i2).upper;
    IdealPresentation i3 = ideal(3, std::string(gens) + ", z3");
    IdealPresentation i4 = ideal(4, std::string(gens) + ", z3, z4");
    EXPECT_EQ(type1(i3).upper, t);
    EXPECT_EQ(type1(i4).upper, t);
  }
}

TEST(Type1, TruncationLimited)
{
  EngineOptions opt;
  opt.truncation_cap = 4;
  opt.min_truncation = 4;
  InvariantReport r = type1(adjoin(base, {LinearForm({Rational(1), Rational(1), Rational(1)})}), opt);
  EXPECT_EQ(r.status, Status::TruncationLimited);
  EXPECT_LE(r.lower, ExtendedRational(4));
}

TEST(Typeq, BaseIdeal)
{
  InvariantReport r = typeq(base, 2, SamplePlan{});
  EXPECT_EQ(r.status, Status::Exact);
  EXPECT_EQ(r.upper, ExtendedRational(3));
  EXPECT_NE(r.notes.front().find("(z3)"), std::string::npos);
  EXPECT_TRUE(revalidate(r).empty());
}

TEST(Typeq, QEqualsOneIsType1)
{
  IdealPresentation i = ideal(2, "z1^3 + z1*z2, z2^2");
  EXPECT_EQ(typeq(i, 1, SamplePlan{}).upper, type1(i).upper);
  EXPECT_THROW(typeq(i, 3, SamplePlan{}), std::invalid_argument);
  EXPECT_THROW(typeq(i, 0, SamplePlan{}), std::invalid_argument);
}

TEST(Typeq, MFamilyBoundViaZ3)
{
  for (int m = 3; m <= 5; ++m) {
    IdealPresentation i = ideal(3, "z1^" + std::to_string(m) + " - z3*z2, z2^" + std::to_string(m));
    InvariantReport r = typeq(i, 2, SamplePlan{});
    EXPECT_LE(r.upper, ExtendedRational(m));
    bool via_z3 = false;
    for (const auto& s : r.samples)
      if (s.label == "coordinate" && s.forms[0] == LinearForm::coordinate(3, 2))
        via_z3 = s.upper == ExtendedRational(m);
    EXPECT_TRUE(via_z3);
  }
}

TEST(Typeq, ExtraCandidatesCanLowerTheBound)
{
  IdealPresentation i = ideal(3, "z1^2 - z2*z3, z2^2 - z1*z3");
  std::vector<std::vector<LinearForm>> extras{{LinearForm({Rational(1), Rational(-1), Rational(0)})}};
  InvariantReport with = typeq(i, 2, SamplePlan{}, extras);
  InvariantReport without = typeq(i, 2, SamplePlan{});
  EXPECT_LE(with.upper, without.upper);
  EXPECT_THROW(typeq(i, 2, SamplePlan{}, {{}}), std::invalid_argument);
}

TEST(Betaq, Examples)
{
  InvariantReport r = betaq(base, 2, SamplePlan{});
  EXPECT_EQ(r.status, Status::Exact);
  EXPECT_EQ(r.upper, ExtendedRational(4));
  EXPECT_EQ(r.samples.size(), 5u);
  EXPECT_EQ(betaq(ideal(3, "z1^4 - z2*z3, z2^3"), 2, SamplePlan{}).upper, ExtendedRational(9));
  IdealPresentation i = ideal(2, "z1^3 + z1*z2, z2^2");
  EXPECT_EQ(betaq(i, 1, SamplePlan{}).upper, type1(i).upper);
  EXPECT_THROW(betaq(i, 2, SamplePlan{1, 100, 1}), std::invalid_argument);
}

TEST(Betaq, AtLeastTypeq)
{
  for (const char* gens : {"z1^3 - z2*z3, z2^2", "z1^2 - z2*z3, z2^3", "z1^3 + z2^3 - z1*z3, z2^2 - z3^3"}) {
    IdealPresentation i = ideal(3, gens);
    EXPECT_LE(typeq(i, 2, SamplePlan{}).upper, betaq(i, 2, SamplePlan{}).upper) << gens;
  }
}

TEST(Betaq, DisagreementIsReportedAsUpperBound)
{
  // heights of 1 hit the special strata of the base ideal often
  SamplePlan plan{8, 1, 3};
  InvariantReport r = betaq(base, 2, plan);
  if (r.status != Status::Exact) {
    EXPECT_EQ(r.status, Status::UpperBound);
    EXPECT_GT(r.samples.size(), 8u);
  }
}

TEST(CatlinQ, BaseIdealAndFamily)
{
  InvariantReport d = catlin_q(base, 2, SamplePlan{});
  EXPECT_EQ(d.name, Invariant::Dq);
  EXPECT_EQ(d.upper, ExtendedRational(4));
  ASSERT_EQ(d.related.size(), 1u);
  EXPECT_EQ(d.related[0].status, Status::LowerBound);
  EXPECT_LE(d.related[0].lower, d.upper);
  for (int m = 3; m <= 5; ++m) {
    IdealPresentation i = ideal(3, "z1^" + std::to_string(m) + " - z3*z2, z2^" + std::to_string(m));
    EXPECT_EQ(catlin_q(i, 2, SamplePlan{}).upper, ExtendedRational(m * (m - 1)));
  }
  IdealPresentation two = ideal(2, "z1^3 + z1*z2, z2^2");
  EXPECT_EQ(catlin_q(two, 1, SamplePlan{}).upper, type1(two).upper);
}

TEST(SlicingBound, Examples)
{
  std::vector<Polynomial> v{base[0]};
  InvariantReport r = catlin_q_slicing_bound(base, 2, v, SamplePlan{});
  EXPECT_EQ(r.status, Status::LowerBound);
  EXPECT_EQ(r.lower, ExtendedRational(4));
  EXPECT_EQ(r.samples.size(), 5u);
  for (const auto& s : r.samples)
    EXPECT_EQ(s.lower, s.upper);

  IdealPresentation m4 = ideal(3, "z1^4 - z3*z2, z2^4");
  std::vector<Polynomial> v4{m4[0]};
  EXPECT_EQ(catlin_q_slicing_bound(m4, 2, v4, SamplePlan{}).lower, ExtendedRational(12));

  EXPECT_THROW(catlin_q_slicing_bound(base, 2, std::vector<Polynomial>{}, SamplePlan{}), std::invalid_argument);
  EXPECT_THROW(catlin_q_slicing_bound(ideal(2, "z1, z2"), 2, std::nullopt, SamplePlan{}), std::invalid_argument);
  EXPECT_THROW(catlin_q_slicing_bound(base, 3, std::nullopt, SamplePlan{}), std::invalid_argument);
}

TEST(CheckChain, Examples)
{
  ChainReport a = check_chain(base, 2, SamplePlan{});
  EXPECT_EQ(a.overall(), Verdict::Pass);
  ChainReport b = check_chain(ideal(3, "z1^4 - z2*z3, z2^3"), 2, SamplePlan{});
  EXPECT_EQ(b.tq.upper, ExtendedRational(4));
  EXPECT_EQ(b.dq.upper, ExtendedRational(9));
  EXPECT_EQ(b.overall(), Verdict::Pass);
  ChainReport c = check_chain(ideal(2, "z1^3 + z1*z2, z2^2"), 1, SamplePlan{});
  EXPECT_EQ(c.overall(), Verdict::Pass);
}

TEST(Revalidate, DetectsTamperedWitness)
{
  InvariantReport r = type1(ideal(2, "z1^3 + z1*z2, z2^2"));
  EXPECT_TRUE(revalidate(r).empty());
  r.witnesses[0].generator_orders[1] = 5;
  EXPECT_EQ(revalidate(r).size(), 1u);
}
