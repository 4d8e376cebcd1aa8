#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wald/error.hpp"
#include "wald/rat.hpp"

using wald::Integer;
using wald::Rat;

TEST(Rat, CanonicalForm) {
  const Rat r(Integer(6), Integer(-4));
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(Rat(10, 5).str(), "2");
  EXPECT_TRUE(Rat(10, 5).is_integer());
  EXPECT_EQ(Rat(0, 7).den(), 1);
}

TEST(Rat, ZeroDenominatorIsRejected) {
  EXPECT_THROW(Rat(1, 0), wald::DomainError);
  EXPECT_THROW(Rat(0).reciprocal(), wald::DomainError);
  EXPECT_THROW(Rat(1) / Rat(0), wald::DomainError);
}

TEST(Rat, Parse) {
  EXPECT_EQ(Rat::parse("3/4"), Rat(3, 4));
  EXPECT_EQ(Rat::parse("-12/8"), Rat(-3, 2));
  EXPECT_EQ(Rat::parse("17"), Rat(17));
  EXPECT_EQ(Rat::parse("-0.25"), Rat(-1, 4));
  EXPECT_EQ(Rat::parse("1e-8"), Rat(1, 100000000));
  EXPECT_EQ(Rat::parse("2.5E2"), Rat(250));
  for (const char* bad : {"", "abc", "1/", "/2", "1/0", "1.2.3", "1e", "--1", "1 /2"}) {
    EXPECT_THROW(Rat::parse(bad), wald::InputError) << bad;
  }
}

TEST(Rat, Decimal) {
  EXPECT_EQ(wald::to_decimal(Rat(64, 13), 6), "4.923077");
  EXPECT_EQ(wald::to_decimal(Rat(1, 3), 6), "0.333333");
  EXPECT_EQ(wald::to_decimal(Rat(-2, 3), 6), "-0.666667");
  EXPECT_EQ(wald::to_decimal(Rat(5), 2), "5.00");
  // ties go to even
  EXPECT_EQ(wald::to_decimal(Rat(1, 8), 2), "0.12");
  EXPECT_EQ(wald::to_decimal(Rat(3, 8), 2), "0.38");
  EXPECT_EQ(wald::to_decimal(Rat(-1, 8), 2), "-0.12");
}

TEST(Rat, OrderingAndHelpers) {
  EXPECT_LT(Rat(1, 3), Rat(1, 2));
  EXPECT_GT(Rat(-1, 3), Rat(-1, 2));
  EXPECT_EQ(Rat(-5, 2).abs(), Rat(5, 2));
  EXPECT_EQ(wald::pow(Rat(2, 3), 3), Rat(8, 27));
  EXPECT_EQ(wald::pow(Rat(7), 0), Rat(1));
  EXPECT_EQ(wald::factorial(0), 1);
  EXPECT_EQ(wald::factorial(10), 3628800);
  EXPECT_EQ(wald::binomial(5, 2), 10);
  EXPECT_EQ(wald::binomial(2, 5), 0);
  EXPECT_EQ(wald::binomial(-1, 3), -1);
}

TEST(RatProperty, ArithmeticStaysCanonical) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30), op(0, 3);
  Rat acc(1);
  for (int i = 0; i < 1000; ++i) {
    const Rat x(num(rng), den(rng));
    switch (op(rng)) {
      case 0: acc += x; break;
      case 1: acc -= x; break;
      case 2: acc *= x; break;
      default:
        if (!x.is_zero()) acc /= x;
    }
    if (acc.num() > Integer("1000000000000") || acc.num() < Integer("-1000000000000")) acc = x;
    ASSERT_GT(acc.den(), 0);
    Integer g;
    mpz_gcd(g.get_mpz_t(), acc.num().get_mpz_t(), acc.den().get_mpz_t());
    ASSERT_EQ(g, 1);
    ASSERT_EQ(Rat::parse(acc.str()), acc);
  }
}

TEST(RatProperty, FieldAxioms) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    const Rat a = wald::oracle::random_positive_rat(rng) - Rat(10);
    const Rat b = wald::oracle::random_positive_rat(rng);
    const Rat c = wald::oracle::random_positive_rat(rng) - Rat(3);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ(a - a, Rat(0));
  }
}
