#include <gtest/gtest.h>

#include "pinclass/json_io.hpp"
#include "pinclass/oracle.hpp"
#include "pinclass/pipeline.hpp"
#include "support.hpp"

using namespace pinclass;

TEST(Json, PermRoundTrip) {
  const auto p = CentredPerm::from_oneline("413685[7]92");
  const Json j = to_json(p);
  EXPECT_EQ(j["origin"], 7);
  EXPECT_EQ(perm_from_json(j), p);
}

TEST(Json, PolyAndGfRoundTrip) {
  const Poly p({Rational(1), Rational(-3, 2), Rational(0), Rational(2)});
  EXPECT_EQ(poly_from_json(to_json(p)), p);
  const auto f = testing_support::gf("1-z", "1-2z-z^3");
  const Json j = to_json(f);
  EXPECT_EQ(j["text"], f.to_string());
  EXPECT_EQ(ratgf_from_json(j), f);
}

TEST(Json, GrowthRoundTrip) {
  const auto g = smallest_positive_root(parse_poly("1-4z+2z^2"), default_tolerance());
  const auto back = growth_from_json(to_json(g));
  EXPECT_EQ(back.lo, g.lo);
  EXPECT_EQ(back.hi, g.hi);
  EXPECT_EQ(back.decimal, g.decimal);
  EXPECT_EQ(back.polynomial, g.polynomial);
}

TEST(Json, CensusRoundTrip) {
  const auto c = enumerate_class_subset(parse_pin_spec("1(ru)*"), 4);
  const auto back = census_from_json(to_json(c));
  EXPECT_EQ(back.counts, c.counts);
  EXPECT_EQ(back.method, c.method);
  EXPECT_EQ(back.n_max, c.n_max);
  EXPECT_EQ(back.depth, c.depth);
}

TEST(Json, PipelineFields) {
  const auto r = run_pipeline(parse_pin_spec("1(ru)*"), GfMode::Class, default_tolerance());
  const Json j = to_json(r);
  for (const char* key : {"spec", "mode", "g", "g_quadrants", "G", "f", "growth"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["g_quadrants"].size(), 4u);
  EXPECT_EQ(ratgf_from_json(j["f"]), r.f);
}
