#include <gtest/gtest.h>

#include "pinclass/errors.hpp"
#include "pinclass/oracle.hpp"
#include "pinclass/pipeline.hpp"
#include "support.hpp"

using namespace pinclass;
using testing_support::long_coeffs;

namespace {

template <typename F>
ErrorKind error_of(F&& f) {
  try {
    f();
  } catch (const PinError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorKind::EmptyInput;
}

}  // namespace

TEST(Composition, MatchesClassGf) {
  for (const char* s : {"1(ru)*", "2(urul)*"}) {
    const auto spec = parse_pin_spec(s);
    const auto c = enumerate_class_composition(spec, 7);
    EXPECT_EQ(c.counts, long_coeffs(class_gf(spec), 7)) << s;
    for (std::size_t n = 0; n <= 7; ++n) EXPECT_EQ(c.perms[n].size(), static_cast<std::size_t>(c.counts[n]));
  }
}

TEST(Composition, MembersAreClosedUnderDeletion) {
  const auto c = enumerate_class_composition(parse_pin_spec("1(ldru)*"), 5);
  const std::set<CentredPerm> members(c.perms[4].begin(), c.perms[4].end());
  for (const auto& p : c.perms[5])
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i == p.origin()) continue;
      const std::vector<std::size_t> drop{i};
      EXPECT_TRUE(members.count(p.without(drop))) << p.to_string();
    }
}

TEST(Subset, AgreesWithComposition) {
  for (const char* s : {"1(ru)*", "2(urul)*", "1(ldru)*"}) {
    const auto spec = parse_pin_spec(s);
    const auto a = enumerate_class_subset(spec, 5);
    const auto b = enumerate_class_composition(spec, 5);
    EXPECT_EQ(a.counts, b.counts) << s;
    EXPECT_EQ(a.perms, b.perms) << s;
    EXPECT_TRUE(a.stable);
    EXPECT_GT(a.depth, 0u);
  }
}

TEST(Subset, NonRecurrentSpec) {
  const auto spec = parse_pin_spec("1(ul)*");
  const auto c = enumerate_class_subset(spec, 5);
  EXPECT_EQ(c.counts[0], 1);
  EXPECT_EQ(error_of([&] { enumerate_class_composition(spec, 4); }), ErrorKind::NotRecurrent);
}

TEST(Guards, CensusLimits) {
  const auto spec = parse_pin_spec("1(ru)*");
  EXPECT_EQ(error_of([&] { enumerate_class_subset(spec, 7); }), ErrorKind::CensusTooLarge);
  EXPECT_EQ(error_of([&] { enumerate_class_composition(spec, 11); }), ErrorKind::CensusTooLarge);
  EXPECT_EQ(error_of([] { enumerate_pin_permutations(9); }), ErrorKind::CensusTooLarge);
  EXPECT_EQ(error_of([] { enumerate_generated_closure({}, 3); }), ErrorKind::EmptyInput);
}

TEST(Complete, MatchesGf) {
  const auto c = enumerate_pin_permutations(6);
  EXPECT_EQ(c.counts, long_coeffs(complete_class_gf({1, 2, 3, 4}), 6));
}

TEST(Generated, MatchesFiniteClosureGf) {
  const std::vector<CentredPerm> gens{CentredPerm::from_oneline("41[3]52")};
  const auto c = enumerate_generated_closure(gens, 7);
  EXPECT_EQ(c.counts, long_coeffs(finite_closure_gf(gens), 7));
}

TEST(Properties, HoldOnCensuses) {
  const auto c = enumerate_class_composition(parse_pin_spec("1(ldru)*"), 8);
  const auto r = property_suite(c, true, true);
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.supermultiplicative_checked);
  EXPECT_GT(r.checks, 0u);
}

TEST(Properties, DetectViolations) {
  ClassCensus fake;
  fake.n_max = 3;
  fake.counts = {1, 1, 13, 2};
  const auto r = property_suite(fake, true, true);
  EXPECT_FALSE(r.ok());
}

TEST(Uncentred, Bounds) {
  const auto c = enumerate_class_composition(parse_pin_spec("2(urul)*"), 6);
  const auto r = centred_uncentred_check(c);
  EXPECT_TRUE(r.ok());
  ClassCensus bare = c;
  bare.perms.clear();
  EXPECT_EQ(error_of([&] { centred_uncentred_check(bare); }), ErrorKind::EmptyInput);
}

TEST(Uncentred, FourPointClass) {
  std::vector<CentredPerm> points;
  for (Quadrant q = 1; q <= 4; ++q) points.push_back(single_point(q));
  const auto c = enumerate_generated_closure(points, 6);
  const auto r = centred_uncentred_check(c);
  ASSERT_TRUE(r.ok());
  const auto expected = long_coeffs(testing_support::gf("z-2z^2", "1-4z+2z^2"), 6);
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(r.uncentred[n], expected[n]) << n;
}
