#include <gtest/gtest.h>

#include "pfb/bigint.hpp"
#include "pfb/errors.hpp"

namespace pfb {
namespace {

TEST(BigInt, PowAndBinomial) {
  EXPECT_EQ(pow(Natural(3), 0), 1);
  EXPECT_EQ(pow(Natural(2), 100), Natural(1) << 100);
  EXPECT_EQ(pow(Rational(2, 3), 3), Rational(8, 27));
  EXPECT_EQ(binomial(13, 2), 78);
  EXPECT_EQ(binomial(5, 7), 0);
  EXPECT_EQ(binomial(60, 30), Natural("118264581564861424"));
}

TEST(BigInt, PowRefusesHugeResults) {
  EXPECT_THROW(pow(Natural(3), kMaxResultBits + 1), InvalidFormat);
  EXPECT_EQ(pow(Natural(1), kMaxResultBits * 4), 1);
}

TEST(BigInt, CeilRoundsTowardPositiveInfinity) {
  EXPECT_EQ(ceil(Rational(7, 2)), 4);
  EXPECT_EQ(ceil(Rational(6, 2)), 3);
  EXPECT_EQ(ceil(Rational(-7, 2)), -3);
}

TEST(BigInt, BitLengthAndLog2) {
  EXPECT_EQ(bit_length(Natural(0)), 0u);
  EXPECT_EQ(bit_length(Natural(1)), 1u);
  EXPECT_EQ(bit_length(Natural(1) << 200), 201u);
  EXPECT_DOUBLE_EQ(log2(Natural(1024)), 10.0);
  EXPECT_NEAR(log2(Natural(3) << 500), 500 + std::log2(3.0), 1e-9);
}

TEST(BigInt, ParseRational) {
  EXPECT_EQ(parse_rational("1/10"), Rational(1, 10));
  EXPECT_EQ(parse_rational(" -3 / 6 "), Rational(-1, 2));
  EXPECT_EQ(parse_rational("-0.25"), Rational(-1, 4));
  EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
  EXPECT_EQ(parse_rational("1e-3"), Rational(1, 1000));
  EXPECT_EQ(parse_rational("2.5E2"), Rational(250));
  EXPECT_EQ(to_string(Rational(3, 4)), "3/4");
  EXPECT_EQ(to_string(Rational(8, 4)), "2");
  for (const char* bad : {"", "1/0", "abc", "1.2.3", "--1", "1e", "1e99999"}) {
    EXPECT_THROW(parse_rational(bad), InvalidFormat) << bad;
  }
}

}  // namespace
}  // namespace pfb
