#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace germ_contact;
using namespace testing_helpers;

TEST(ParseIdeal, BaseExample)
{
  IdealPresentation i = parse_ideal("ring z1..z3; ideal = z1^3 - z2*z3, z2^2;");
  ASSERT_EQ(i.size(), 2u);
  EXPECT_EQ(i.nvars(), 3);
  EXPECT_EQ(i[0], var(3, 0).pow(3) - var(3, 1) * var(3, 2));
  EXPECT_EQ(i[1], var(3, 1).pow(2));
}

TEST(ParseIdeal, SingleGeneratorRationalsParenthesesComments)
{
  EXPECT_EQ(parse_ideal("ring z1..z2; ideal = z1;").size(), 1u);
  IdealPresentation i = parse_ideal("# comment\nring z1..z2;\nideal = 3/6*(z1 + -z2)^2 # trailing\n ;");
  EXPECT_EQ(i[0], Rational(make_rational(1, 2)) * (var(2, 0) - var(2, 1)).pow(2));
}

TEST(ParseIdeal, OtherPrefix)
{
  IdealPresentation i = parse_ideal("ring x1..x2; ideal = x1^2 + x2;");
  EXPECT_EQ(i[0], var(2, 0).pow(2) + var(2, 1));
}

namespace {

ParseError parse_error(const std::string& text)
{
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for: " << text;
  return ParseError(0, 0, "");
}

}  // namespace

TEST(ParseIdeal, DanglingOperator)
{
  ParseError e = parse_error("ring z1..z2; ideal = z1^3 - ;");
  EXPECT_EQ(e.line(), 1);
  EXPECT_EQ(e.column(), 29);
}

TEST(ParseIdeal, Errors)
{
  EXPECT_NE(parse_error("ring z1..z2; ideal = z3;").message().find("undeclared"), std::string::npos);
  EXPECT_NE(parse_error("ring z1..z2; ideal = z1 + 1;").message().find("constant term"), std::string::npos);
  EXPECT_NE(parse_error("ring z1..z2; ideal = z1^-1;").message().find("exponent"), std::string::npos);
  EXPECT_NE(parse_error("ring z1..z2; ideal = z1^2^2;").message().find("chained"), std::string::npos);
  EXPECT_NE(parse_error("ring z1..z2; ideal = 1/0*z1;").message().find("zero denominator"), std::string::npos);
  EXPECT_NE(parse_error("ring z1..z2; ideal = z1^100000;").message().find("exponent"), std::string::npos);
  ParseError multi = parse_error("ring z1..z2;\nideal = z1,\n   z2 $;");
  EXPECT_EQ(multi.line(), 3);
  EXPECT_EQ(multi.column(), 7);
  std::string deep = "ring z1..z2; ideal = " + std::string(1000, '(') + "z1" + std::string(1000, ')') + ";";
  EXPECT_NE(parse_error(deep).message().find("nested"), std::string::npos);
}

TEST(ParseHypersurface, Examples)
{
  ParsedHypersurface h = parse_hypersurface("ring z1..z4; hyper = Re(z4) + abs2(z1^3 - z3*z2) + abs2(z2^2);");
  EXPECT_EQ(h.h, var(4, 3));
  ASSERT_EQ(h.fs.size(), 2u);
  EXPECT_EQ(h.fs[0], var(4, 0).pow(3) - var(4, 2) * var(4, 1));
  EXPECT_EQ(h.fs[1], var(4, 1).pow(2));
  ParsedHypersurface plain = parse_hypersurface("ring z1..z2; hyper = Re(z2);");
  EXPECT_EQ(plain.h, var(2, 1));
  EXPECT_TRUE(plain.fs.empty());
}

TEST(ParseHypersurface, Errors)
{
  EXPECT_NE(parse_error("ring z1..z2; hyper = Re(z1^2);").message().find("zero linear part"), std::string::npos);
  EXPECT_NE(parse_error("ring z1..z2; hyper = abs2(z1);").message().find("Re("), std::string::npos);
  EXPECT_THROW(parse_hypersurface("ring z1..z2; ideal = z1;"), ParseError);
}

TEST(ParseIdeal, RoundTrip)
{
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) {
      Polynomial p = random_poly(3, 6, 5, rng);
      gens.push_back(Rational(make_rational(1, 3)) * p);
    }
    IdealPresentation i(3, gens);
    EXPECT_EQ(parse_ideal(to_source(i)), i);
  }
}

TEST(ParseIdeal, FuzzedInputNeverCrashes)
{
  std::mt19937_64 rng(4);
  const std::string alphabet = "z1234567890+-*/^(),;= .#\nringdealhypRabs";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1), len(0, 60);
  int parsed = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    std::string s = trial % 2 ? "ring z1..z3; ideal = " : "";
    std::size_t n = len(rng);
    for (std::size_t k = 0; k < n; ++k)
      s += alphabet[pick(rng)];
    try {
      parse_document(s);
      ++parsed;
    } catch (const ParseError& e) {
      EXPECT_GE(e.line(), 1);
      EXPECT_GE(e.column(), 1);
    } catch (const std::invalid_argument&) {
    }
  }
  SUCCEED() << parsed << " inputs parsed";
}
