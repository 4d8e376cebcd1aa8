#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wald/error.hpp"
#include "wald/poly.hpp"

using wald::Poly;
using wald::Rat;

namespace {

Poly random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
  std::vector<Rat> c(deg(rng) + 1);
  for (auto& x : c) x = Rat(num(rng), den(rng));
  return Poly(c);
}

}  // namespace

TEST(Poly, TrimsAndReportsDegree) {
  EXPECT_EQ(Poly({Rat(1), Rat(0), Rat(0)}).degree(), 0);
  EXPECT_EQ(Poly().degree(), -1);
  EXPECT_TRUE(Poly({Rat(0)}).is_zero());
  EXPECT_EQ(Poly::monomial(Rat(3), 4).leading(), Rat(3));
}

TEST(Poly, ToString) {
  EXPECT_EQ(wald::to_string(Poly({Rat(-1), Rat(1)})), "t - 1");
  EXPECT_EQ(wald::to_string(Poly({Rat(5), Rat(-5), Rat(0), Rat(1, 6)})), "1/6 t^3 - 5 t + 5");
  EXPECT_EQ(wald::to_string(Poly()), "0");
  EXPECT_EQ(wald::to_string(Poly({Rat(0), Rat(-1)}), "x"), "-x");
}

TEST(Poly, ThirdDerivativeOfCubic) {
  const Poly p({Rat(5), Rat(-5), Rat(0), Rat(1, 6)});
  EXPECT_EQ(wald::derivative(p, 3), Poly::constant(Rat(1)));
  EXPECT_TRUE(wald::derivative(p, 4).is_zero());
  EXPECT_EQ(wald::derivative(p, 0), p);
}

TEST(Poly, EvaluateAndDivmod) {
  const Poly p({Rat(-2), Rat(0), Rat(1)});
  EXPECT_EQ(wald::evaluate(p, Rat(3, 2)), Rat(1, 4));
  const auto [q, r] = wald::divmod(p, Poly({Rat(-1), Rat(1)}));
  EXPECT_EQ(q, Poly({Rat(1), Rat(1)}));
  EXPECT_EQ(r, Poly::constant(Rat(-1)));
  EXPECT_THROW(wald::divmod(p, Poly()), wald::DomainError);
}

TEST(Poly, GcdAndSquareFree) {
  const Poly a({Rat(-1), Rat(1)});
  const Poly b({Rat(2), Rat(1)});
  const Poly p = a * a * a * b;
  EXPECT_EQ(wald::gcd(p, a * b * Rat(7)), a * b);
  EXPECT_EQ(wald::square_free_part(p), a * b);
  EXPECT_TRUE(wald::gcd(Poly(), Poly()).is_zero());
}

TEST(PolyProperty, DerivativeIsLinear) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Poly p = random_poly(rng, 8), q = random_poly(rng, 8);
    const Rat a = wald::oracle::random_positive_rat(rng), b = wald::oracle::random_positive_rat(rng) - Rat(5);
    for (unsigned k = 0; k <= 3; ++k) {
      EXPECT_EQ(wald::derivative(a * p + b * q, k), a * wald::derivative(p, k) + b * wald::derivative(q, k));
    }
  }
}

TEST(PolyProperty, DivisionIdentity) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    const Poly p = random_poly(rng, 9), d = random_poly(rng, 4);
    if (d.is_zero()) continue;
    const auto [q, r] = wald::divmod(p, d);
    EXPECT_EQ(q * d + r, p);
    EXPECT_LT(r.degree(), d.degree() == 0 ? 0 : d.degree());
  }
}

TEST(PolyProperty, EvaluationIsARingMap) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Poly p = random_poly(rng, 6), q = random_poly(rng, 6);
    const Rat x = wald::oracle::random_positive_rat(rng) - Rat(4);
    EXPECT_EQ(wald::evaluate(p * q, x), wald::evaluate(p, x) * wald::evaluate(q, x));
    EXPECT_EQ(wald::evaluate(p + q, x), wald::evaluate(p, x) + wald::evaluate(q, x));
  }
}
