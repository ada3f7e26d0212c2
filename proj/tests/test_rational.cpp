#include <gtest/gtest.h>

#include <stdexcept>

#include "zigzag/rational.hpp"

using namespace zigzag;

TEST(Rational, ParseCanonicalizes) {
  EXPECT_EQ(parse_rat("6/4"), Rat(3, 2));
  EXPECT_TRUE(is_canonical(parse_rat("-10/4")));
  EXPECT_EQ(to_string(parse_rat("-10/4")), "-5/2");
  EXPECT_EQ(parse_rat("+7"), Rat(7));
  EXPECT_EQ(parse_rat("0/9"), Rat(0));
}

TEST(Rational, ParseRejectsGarbage) {
  for (const char* bad : {"", "/", "1/", "/2", "1/0", "1/-2", "a", "1.5", "1//2", "--1"}) {
    EXPECT_THROW(parse_rat(bad), std::invalid_argument) << bad;
  }
}

TEST(Rational, MakeRatReduces) {
  const Rat r = make_rat(BigInt(2), BigInt(6));
  EXPECT_TRUE(is_canonical(r));
  EXPECT_EQ(r, Rat(1, 3));
  EXPECT_EQ(make_rat(BigInt(3), BigInt(-6)), Rat(-1, 2));
  EXPECT_THROW(make_rat(BigInt(1), BigInt(0)), std::domain_error);
}

TEST(Rational, Combinatorics) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(20), BigInt("2432902008176640000"));
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(pow2(70), BigInt("1180591620717411303424"));
  EXPECT_TRUE(is_integer(make_rat(BigInt(8), BigInt(4))));
  EXPECT_FALSE(is_integer(Rat(1, 3)));
}

TEST(Rational, ArithmeticStaysCanonical) {
  Rat acc = 0;
  for (int i = 1; i <= 30; ++i) {
    acc += make_rat(BigInt(1), BigInt(i * (i + 1)));
    ASSERT_TRUE(is_canonical(acc));
  }
  EXPECT_EQ(acc, Rat(30, 31));
}
