#include <gtest/gtest.h>

#include <algorithm>

#include "support/test_support.hpp"
#include "tightspan/primitives.hpp"
#include "tightspan/rational.hpp"

namespace tightspan {
namespace {

using testing::P;
using testing::Q;

TEST(ParseRational, Fraction) { EXPECT_EQ(parse_rational("3/2"), Rational(3, 2)); }

TEST(ParseRational, DecimalIsExact) {
  EXPECT_EQ(parse_rational("-0.5"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("0.1"), Rational(1, 10));
  EXPECT_EQ(parse_rational(".25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("2."), Rational(2));
}

TEST(ParseRational, LowestTerms) {
  const Rational r = parse_rational("2/4");
  EXPECT_EQ(r.numerator(), "1");
  EXPECT_EQ(r.denominator(), "2");
  EXPECT_EQ(format_rational(parse_rational("-6/4")), "-3/2");
}

TEST(ParseRational, SignsAndWhitespace) {
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(parse_rational("+7"), Rational(7));
  EXPECT_EQ(parse_rational("  5/3 "), Rational(5, 3));
  EXPECT_EQ(parse_rational("\xE2\x88\x92" "2"), Rational(-2));  // U+2212
}

TEST(ParseRational, BigValuesStayExact) {
  const Rational r = parse_rational("123456789012345678901234567890/3");
  EXPECT_EQ(format_rational(r), "41152263004115226300411522630");
}

TEST(ParseRational, Errors) {
  for (const char* bad : {"", "-", "abc", "1/0", "1/", "/2", "1.2.3", "1e5", "0x10", "3/-2", ".", "1 2"}) {
    EXPECT_THROW(parse_rational(bad), ParseError) << "'" << bad << "'";
  }
}

TEST(FormatRational, CanonicalForms) {
  EXPECT_EQ(format_rational(Rational(0)), "0");
  EXPECT_EQ(format_rational(Rational(-4)), "-4");
  EXPECT_EQ(format_rational(Rational(9, 6)), "3/2");
}

TEST(FormatRational, ParseRoundTrip) {
  testing::RandomPoints gen(7, 50, {1, 2, 3, 7, 12, 1000});
  for (int i = 0; i < 500; ++i) {
    const Rational r = gen.coordinate();
    EXPECT_EQ(parse_rational(format_rational(r)), r);
  }
}

TEST(FormatDecimal, TwelveSignificantDigits) {
  EXPECT_EQ(format_decimal(Rational(1, 3)), "0.333333333333");
  EXPECT_EQ(format_decimal(Rational(-2, 3)), "-0.666666666667");
  EXPECT_EQ(format_decimal(Rational(3, 2)), "1.5");
  EXPECT_EQ(format_decimal(Rational(0)), "0");
  EXPECT_EQ(format_decimal(Rational(1200)), "1200");
  EXPECT_EQ(format_decimal(Rational(1, 200)), "0.005");
  EXPECT_EQ(format_decimal(Q("999999999999.6")), "1000000000000");
  EXPECT_EQ(format_decimal(Rational(1, 7), 3), "0.143");
}

TEST(RationalArithmetic, ExactOperations) {
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) - Rational(1, 2), Rational(-1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 3), Rational(1, 2));
  EXPECT_EQ(abs(Rational(-5, 2)), Rational(5, 2));
  EXPECT_EQ(min(Rational(1), Rational(-1)), Rational(-1));
  EXPECT_EQ(max(Rational(1), Rational(-1)), Rational(1));
  EXPECT_EQ(floor(Rational(-3, 2)), Rational(-2));
  EXPECT_EQ(ceil(Rational(-3, 2)), Rational(-1));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(D1, Examples) {
  EXPECT_EQ(d1(P("-1", "0"), P("0", "-2")), Rational(3));
  EXPECT_EQ(d1(P("5/7", "-2"), P("5/7", "-2")), Rational(0));
  EXPECT_EQ(d1(P("0", "0"), P("3/2", "1")), Rational(5, 2));
}

TEST(D1, MetricAxiomsOnRandomTriples) {
  testing::RandomPoints gen(11);
  for (int i = 0; i < 500; ++i) {
    const Point p = gen.point(), q = gen.point(), r = gen.point();
    EXPECT_GE(d1(p, q), Rational(0));
    EXPECT_EQ(d1(p, q) == Rational(0), p == q);
    EXPECT_EQ(d1(p, q), d1(q, p));
    EXPECT_LE(d1(p, r), d1(p, q) + d1(q, r));
  }
}

TEST(Quadrant, StrictInterior) {
  EXPECT_EQ(quadrant(P("0", "0"), P("1", "1")), std::vector<Quadrant>{Quadrant::kPlusPlus});
  EXPECT_EQ(quadrant(P("0", "0"), P("-1", "-3")), std::vector<Quadrant>{Quadrant::kMinusMinus});
}

TEST(Quadrant, BoundaryBelongsToBoth) {
  const auto q = quadrant(P("0", "0"), P("0", "2"));
  EXPECT_EQ(q, (std::vector<Quadrant>{Quadrant::kPlusPlus, Quadrant::kMinusPlus}));
}

TEST(Quadrant, OwnPointInAllFour) { EXPECT_EQ(quadrant(P("1/2", "1/2"), P("1/2", "1/2")).size(), 4u); }

TEST(Quadrant, OppositeQuadrantsMeetOnlyAtApex) {
  testing::RandomPoints gen(13, 2, {1, 2});
  for (int i = 0; i < 500; ++i) {
    const Point p = gen.point(), q = gen.point();
    const bool both = in_quadrant(p, q, Quadrant::kPlusPlus) && in_quadrant(p, q, Quadrant::kMinusMinus);
    EXPECT_EQ(both, p == q);
  }
}

TEST(AxisSegment, BetweenNormalizesAndRejectsDiagonal) {
  const auto s = AxisSegment::between(P("3", "1"), P("-1", "1"));
  EXPECT_EQ(s, AxisSegment::horizontal(Q("1"), Q("-1"), Q("3")));
  EXPECT_EQ(s.length(), Rational(4));
  EXPECT_TRUE(s.contains(P("0", "1")));
  EXPECT_FALSE(s.contains(P("0", "2")));
  EXPECT_THROW(AxisSegment::between(P("0", "0"), P("1", "1")), std::invalid_argument);
  EXPECT_TRUE(AxisSegment::between(P("2", "2"), P("2", "2")).degenerate());
}

TEST(Rect, ContainsIsClosed) {
  const Rect r{Q("0"), Q("2"), Q("0"), Q("1")};
  EXPECT_TRUE(r.contains(P("0", "0")));
  EXPECT_TRUE(r.contains(P("2", "1")));
  EXPECT_FALSE(r.contains(P("2", "3/2")));
  EXPECT_EQ(r.area(), Rational(2));
}

}  // namespace
}  // namespace tightspan
