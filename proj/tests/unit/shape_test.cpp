#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wald/error.hpp"
#include "wald/shape.hpp"

using wald::Configuration;
using wald::Poly;
using wald::Rat;
using wald::SimplexShape;

namespace {

SimplexShape random_shape(std::mt19937_64& rng, unsigned n, unsigned c) {
  std::vector<Rat> a(c);
  for (auto& x : a) x = wald::oracle::random_positive_rat(rng, 12, 5);
  return SimplexShape(n, a);
}

}  // namespace

TEST(Shape, Validation) {
  EXPECT_THROW(SimplexShape(3, {}), wald::InputError);
  EXPECT_THROW(SimplexShape(2, {Rat(1), Rat(1), Rat(1)}), wald::InputError);
  EXPECT_THROW(SimplexShape(2, {Rat(1), Rat(0)}), wald::InputError);
  EXPECT_THROW(wald::star_shape(4, 3, 2), wald::InputError);
  const SimplexShape s(3, {Rat(1), Rat(2)});
  EXPECT_EQ(s.max_intercept(), Rat(2));
}

TEST(Shape, CrossIsTMinusOne) {
  EXPECT_EQ(wald::ahp_simplex(SimplexShape(3, {Rat(1), Rat(2)})), Poly({Rat(-1), Rat(1)}));
}

TEST(Shape, FullSimplexIsConstantVolume) {
  EXPECT_EQ(wald::ahp_simplex(SimplexShape(2, {Rat(1), Rat(1)})), Poly::constant(Rat(1, 2)));
  EXPECT_EQ(wald::ahp_simplex(SimplexShape(3, {Rat(2), Rat(3), Rat(5)})), Poly::constant(Rat(5)));
}

TEST(Shape, StarIntercepts) {
  const auto s = wald::star_shape(4, 3, 6);
  EXPECT_EQ(s.intercepts(), (std::vector<Rat>{Rat(2), Rat(5, 2), Rat(4)}));
}

TEST(Shape, CompleteHomogeneous) {
  const std::vector<Rat> v{Rat(1), Rat(2), Rat(1, 3)};
  for (unsigned k = 0; k <= 5; ++k) {
    EXPECT_EQ(wald::complete_homogeneous(v, k), wald::oracle::complete_homogeneous_brute(v, k)) << k;
  }
}

TEST(Shape, ConfigurationValidation) {
  const SimplexShape s3(3, {Rat(1), Rat(2)});
  const SimplexShape s2(2, {Rat(1), Rat(1)});
  EXPECT_THROW(Configuration(3, {{s3, 1}, {s2, 1}}), wald::InputError);
  EXPECT_THROW(Configuration(3, {{s3, 0}}), wald::InputError);
  EXPECT_THROW(Configuration(3, {{s3, 1}}, 3), wald::InputError);
  const Configuration five(3, {{s3, 5}});
  EXPECT_EQ(wald::ahp_configuration(five), Poly({Rat(-5), Rat(5)}));
  EXPECT_EQ(five.validity_threshold(), Rat(2));
  EXPECT_EQ(five.merged(Configuration(3, {{s3, 2}})).components().size(), 2u);
  EXPECT_EQ(five.with_derivative_order(1).derivative_order(), 1u);
}

TEST(ShapeProperty, ExactVersusPolytopeVolume) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    for (unsigned n = 1; n <= 3; ++n) {
      for (unsigned c = 1; c <= n; ++c) {
        const auto s = random_shape(rng, n, c);
        const Poly p = wald::ahp_simplex(s);
        for (const Rat& extra : {Rat(0), Rat(1, 3), Rat(5, 2)}) {
          const Rat T = s.max_intercept() + extra;
          ASSERT_EQ(wald::evaluate(p, T), wald::oracle::polytope_volume(s, T)) << n << " " << c;
        }
      }
    }
  }
}

TEST(ShapeProperty, MatchesDirichletMoments) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 30; ++i) {
    for (unsigned n = 1; n <= 6; ++n) {
      for (unsigned c = 1; c <= n; ++c) {
        const auto s = random_shape(rng, n, c);
        ASSERT_EQ(wald::ahp_simplex(s), wald::oracle::dirichlet_ahp(s));
      }
    }
  }
}

TEST(ShapeProperty, DegreeIsNMinusC) {
  std::mt19937_64 rng(33);
  for (unsigned n = 1; n <= 6; ++n) {
    for (unsigned c = 1; c <= n; ++c) {
      const Poly p = wald::ahp_simplex(random_shape(rng, n, c));
      EXPECT_EQ(p.degree(), static_cast<int>(n - c));
      EXPECT_GT(p.leading(), Rat(0));
    }
  }
}

TEST(ShapeProperty, DimensionDrop) {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 50; ++i) {
    for (unsigned n = 3; n <= 6; ++n) {
      for (unsigned c = 2; c < n; ++c) {
        const auto s = random_shape(rng, n, c);
        EXPECT_EQ(wald::derivative(wald::ahp_simplex(s)), wald::ahp_simplex(SimplexShape(n - 1, s.intercepts())));
      }
    }
  }
}

TEST(ShapeProperty, MonotoneInIntercepts) {
  std::mt19937_64 rng(35);
  for (int i = 0; i < 50; ++i) {
    const auto s = random_shape(rng, 4, 2);
    auto bigger = s.intercepts();
    bigger[i % 2] += wald::oracle::random_positive_rat(rng);
    const SimplexShape t(4, bigger);
    const Rat at = t.max_intercept() + Rat(1);
    EXPECT_GT(wald::evaluate(wald::ahp_simplex(t), at), wald::evaluate(wald::ahp_simplex(s), at));
  }
}

TEST(ShapeProperty, AdditiveOverComponents) {
  std::mt19937_64 rng(36);
  for (int i = 0; i < 30; ++i) {
    const auto a = random_shape(rng, 4, 2), b = random_shape(rng, 4, 3);
    const Configuration ca(4, {{a, 2}}), cb(4, {{b, 3}});
    EXPECT_EQ(wald::ahp_configuration(ca.merged(cb)),
              wald::ahp_simplex(a) * Rat(2) + wald::ahp_simplex(b) * Rat(3));
  }
}

TEST(StarFormula, DiffersByFactorialOfCodimensionGap) {
  for (unsigned n = 2; n <= 6; ++n) {
    for (unsigned c = 1; c <= n; ++c) {
      for (unsigned s = c; s <= 8; ++s) {
        const Poly integrated = wald::ahp_simplex(wald::star_shape(n, c, s));
        EXPECT_EQ(wald::star_closed_formula(n, c, s), integrated * Rat(wald::factorial(n - c)));
      }
    }
  }
}

TEST(StarFormula, ReportAgreesOnCodimensionGapAtMostOne) {
  const auto report = wald::verify_star_formula(6, 8);
  std::size_t rows = 0;
  for (const auto& r : report.rows) {
    ++rows;
    EXPECT_EQ(r.equal, r.n - r.c <= 1) << r.n << " " << r.c << " " << r.s;
  }
  EXPECT_EQ(rows, report.rows.size());
  EXPECT_EQ(report.mismatches(), 70u);
  EXPECT_THROW(wald::verify_star_formula(1, 5), wald::InputError);
}
