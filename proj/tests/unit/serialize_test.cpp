#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wald/error.hpp"
#include "wald/reference_checks.hpp"
#include "wald/serialize.hpp"

using wald::Json;
using wald::Rat;

namespace {

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const wald::InputError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Serialize, Rationals) {
  EXPECT_EQ(wald::to_json(Rat(-3, 4)), Json("-3/4"));
  EXPECT_EQ(wald::parse_rat(Json("6/8")), Rat(3, 4));
  EXPECT_EQ(wald::parse_rat(Json(7)), Rat(7));
  EXPECT_THROW(wald::parse_rat(Json(0.5)), wald::InputError);
  EXPECT_THROW(wald::parse_rat(Json("1/0")), wald::InputError);
}

TEST(Serialize, PolyRejectsTrailingZero) {
  EXPECT_EQ(wald::parse_poly(Json::array({"-1", "1"})), wald::Poly({Rat(-1), Rat(1)}));
  EXPECT_THROW(wald::parse_poly(Json::array({"1", "0"})), wald::InputError);
}

TEST(Serialize, ErrorsNamePath) {
  const Json j = wald::parse_json_text(R"({"n":3,"components":[{"shape":{"n":3,"intercepts":["1","x"]}}]})");
  EXPECT_NE(message_of([&] { wald::parse_configuration(j); }).find("$.components[0].shape.intercepts[1]"),
            std::string::npos);
  EXPECT_NE(message_of([] { wald::parse_json_text("{\"n\":3,"); }).find("line"), std::string::npos);
  EXPECT_NE(message_of([] { wald::parse_shape(Json{{"c", 1}}); }).find("missing field \"n\""), std::string::npos);
}

TEST(Serialize, StarShorthand) {
  const auto cfg = wald::parse_configuration(wald::parse_json_text(R"({"n":4,"components":[{"star":{"n":4,"c":3,"s":6}}]})"));
  ASSERT_EQ(cfg.components().size(), 1u);
  EXPECT_EQ(cfg.components()[0].shape, wald::star_shape(4, 3, 6));
  EXPECT_EQ(cfg.components()[0].count, 1u);
}

TEST(SerializeProperty, ConfigurationRoundTrip) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 100; ++i) {
    const unsigned n = 2 + rng() % 4;
    std::vector<wald::Component> comps;
    for (int k = 1 + rng() % 3; k > 0; --k) {
      const unsigned c = 1 + rng() % n;
      std::vector<Rat> a(c);
      for (auto& x : a) x = wald::oracle::random_positive_rat(rng);
      comps.push_back({wald::SimplexShape(n, a), static_cast<unsigned>(1 + rng() % 5)});
    }
    const wald::Configuration cfg(n, comps, rng() % n);
    const std::string text = wald::to_json(cfg).dump();
    EXPECT_EQ(wald::parse_configuration(wald::parse_json_text(text)), cfg);
  }
}

TEST(SerializeProperty, BoundReportRoundTrip) {
  for (unsigned s = 1; s <= 12; ++s) {
    for (unsigned c = 0; c <= 2; ++c) {
      const wald::Configuration cfg(3, {{wald::SimplexShape(3, {Rat(1), Rat(2)}), s}}, c);
      const auto report = wald::waldschmidt_bound(cfg);
      EXPECT_EQ(wald::parse_bound_report(wald::parse_json_text(wald::to_json(report).dump())), report);
    }
  }
  const wald::Configuration star(4, {{wald::star_shape(4, 3, 5), 1}});
  const auto none = wald::waldschmidt_bound(star);
  EXPECT_EQ(wald::parse_bound_report(wald::to_json(none)), none);
}

TEST(SerializeProperty, IdealAndSamplesRoundTrip) {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 50; ++i) {
    const auto K = wald::random_delta_ideal(rng);
    EXPECT_EQ(wald::parse_ideal(wald::to_json(K)), K);
  }
  const std::vector<wald::VariableSet> pts{{0, 1}, {0, 2}, {1, 2}};
  const auto samples = wald::waldschmidt_samples(2, pts, 5);
  EXPECT_EQ(wald::parse_samples(wald::to_json(samples)), samples);
  EXPECT_EQ(wald::parse_primes(Json::array({Json::array({0, 1}), Json::array({2})})),
            (std::vector<wald::VariableSet>{{0, 1}, {2}}));
}
