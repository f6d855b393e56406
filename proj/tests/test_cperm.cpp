#include <gtest/gtest.h>

#include <bit>

#include "pinclass/cperm.hpp"
#include "pinclass/errors.hpp"
#include "support.hpp"

using namespace pinclass;
using testing_support::random_perm;

namespace {

CentredPerm P(const char* s) { return CentredPerm::from_oneline(s); }

ErrorKind kind_of(const char* text) {
  try {
    P(text);
  } catch (const PinError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for " << text;
  return ErrorKind::MalformedSyntax;
}

// Brute force: p contains q iff some subset of positions including the origin
// restricts to q.
bool contains_brute(const CentredPerm& p, const CentredPerm& q) {
  const std::size_t n = p.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> p.origin() & 1) || std::popcount(mask) != static_cast<int>(q.size())) continue;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) keep.push_back(i);
    if (p.restricted_to(keep) == q) return true;
  }
  return false;
}

}  // namespace

TEST(CentredPerm, ParsesBracketNotation) {
  const auto p = P("426[3]51");
  EXPECT_EQ(p.length(), 5u);
  EXPECT_EQ(p.origin(), 3u);
  EXPECT_EQ(p.origin_value(), 3);
  EXPECT_EQ(p.to_string(), "426[3]51");
  EXPECT_EQ(P("4,2,6,[3],5,1"), p);
}

TEST(CentredPerm, EmptyIsOriginAlone) {
  EXPECT_EQ(P("[1]"), CentredPerm());
  EXPECT_EQ(CentredPerm().length(), 0u);
}

TEST(CentredPerm, CommaFormAboveNine) {
  const auto p = P("1,2,3,4,5,6,7,8,9,[10]");
  EXPECT_EQ(p.length(), 9u);
  EXPECT_EQ(p.to_string(), "1,2,3,4,5,6,7,8,9,[10]");
  EXPECT_EQ(P(p.to_string().c_str()), p);
}

TEST(CentredPerm, ParseErrors) {
  EXPECT_EQ(kind_of(""), ErrorKind::EmptyInput);
  EXPECT_EQ(kind_of("123"), ErrorKind::NoOrigin);
  EXPECT_EQ(kind_of("[1][2]"), ErrorKind::MultipleOrigins);
  EXPECT_EQ(kind_of("1[1]"), ErrorKind::NotAPermutation);
  EXPECT_EQ(kind_of("1[3]"), ErrorKind::NotAPermutation);
  EXPECT_EQ(kind_of("1[2"), ErrorKind::MalformedSyntax);
}

TEST(CentredPerm, OriginDistinguishes) {
  EXPECT_NE(P("[1]2"), P("1[2]"));
  EXPECT_EQ(P("[1]2").strip_origin(), P("1[2]").strip_origin());
}

TEST(CentredPerm, Quadrants) {
  const auto p = P("3[2]41");
  EXPECT_EQ(p.quadrant_of(0), 2);
  EXPECT_EQ(p.quadrant_of(2), 1);
  EXPECT_EQ(p.quadrant_of(3), 4);
  for (Quadrant q = 1; q <= 4; ++q) {
    const auto s = single_point(q);
    EXPECT_EQ(s.length(), 1u);
    EXPECT_EQ(one_quadrant(s), q);
  }
  EXPECT_EQ(one_quadrant(p), std::nullopt);
  EXPECT_EQ(quadrant_profile(p).occupied_count(), 3u);
}

TEST(CentredPerm, AdjacencyCondition) {
  EXPECT_TRUE(adjacency_condition(quadrant_profile(P("[1]2"))));
  EXPECT_TRUE(adjacency_condition(quadrant_profile(P("2[1]3"))));
  EXPECT_FALSE(adjacency_condition(quadrant_profile(P("1[2]3"))));
  EXPECT_TRUE(adjacency_condition(quadrant_profile(P("3[2]41"))));
  EXPECT_FALSE(adjacency_condition(quadrant_profile(P("3[2]1"))));
}

TEST(CentredPerm, BoxSumExample) {
  EXPECT_EQ(box_sum(P("241[3]5"), P("413[5]2")), P("413685[7]92"));
  EXPECT_EQ(box_sum(CentredPerm(), P("41[3]52")), P("41[3]52"));
  EXPECT_EQ(box_sum(P("41[3]52"), CentredPerm()), P("41[3]52"));
}

TEST(CentredPerm, ContainmentMatchesBruteForce) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto big = random_perm(rng, 5);
    const auto small = random_perm(rng, trial % 4);
    EXPECT_EQ(contains(big, small), contains_brute(big, small)) << big.to_string() << " " << small.to_string();
  }
}

TEST(CentredPerm, ContainmentPinsOrigin) {
  EXPECT_TRUE(contains(P("3[2]41"), P("[1]2")));
  EXPECT_TRUE(contains(P("3[2]41"), P("2[1]3")));
  EXPECT_FALSE(contains(P("3[2]41"), P("3[1]2")));
  EXPECT_TRUE(contains(P("3[2]41"), CentredPerm()));
}

TEST(CentredPerm, MinimalIntervalsNeedPoints) {
  try {
    minimal_centred_intervals(CentredPerm());
    FAIL();
  } catch (const PinError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyPermutation);
  }
}

TEST(CentredPerm, TwoOppositeMinimalIntervals) {
  const auto p = box_sum(single_point(1), single_point(3));
  EXPECT_EQ(minimal_centred_intervals(p).size(), 2u);
  EXPECT_EQ(box_decompose(p).size(), 2u);
}

TEST(CentredPerm, Indecomposables) {
  EXPECT_TRUE(is_box_indecomposable(P("[1]32")));
  EXPECT_TRUE(is_box_indecomposable(P("41[3]52")));
  EXPECT_FALSE(is_box_indecomposable(P("413685[7]92")));
  try {
    is_box_indecomposable(CentredPerm());
    FAIL();
  } catch (const PinError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyPermutation);
  }
  for (Quadrant q = 1; q <= 4; ++q) EXPECT_TRUE(is_box_indecomposable(single_point(q)));
}

TEST(CentredPerm, DecomposeRoundTrip) {
  const auto p = P("413685[7]92");
  const auto parts = box_decompose(p);
  ASSERT_GE(parts.size(), 2u);
  for (const auto& part : parts) EXPECT_TRUE(is_box_indecomposable(part));
  EXPECT_EQ(box_sum_all(parts), p);
  EXPECT_EQ(parts, (std::vector<CentredPerm>{P("241[3]"), P("[1]2"), P("413[5]2")}));
}

TEST(CentredPerm, DecomposeTieBreak) {
  EXPECT_EQ(box_decompose(P("1[2]43")), (std::vector<CentredPerm>{P("[1]32"), P("1[2]")}));
  EXPECT_EQ(box_decompose(P("41[3]52")), std::vector<CentredPerm>{P("41[3]52")});
}

TEST(CentredPerm, Commutation) {
  EXPECT_TRUE(commutes(single_point(1), single_point(3)));
  EXPECT_TRUE(commutes(single_point(2), single_point(4)));
  EXPECT_FALSE(commutes(single_point(1), single_point(2)));
  EXPECT_TRUE(commutes(single_point(1), single_point(1)));
  EXPECT_EQ(box_sum(single_point(1), single_point(3)), box_sum(single_point(3), single_point(1)));
  EXPECT_NE(box_sum(single_point(1), single_point(2)), box_sum(single_point(2), single_point(1)));
}

TEST(CentredPerm, NormalFormRejectsDecomposables) {
  const std::vector<CentredPerm> parts{P("413685[7]92")};
  try {
    normal_form(parts);
    FAIL();
  } catch (const PinError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonIndecomposableElement);
  }
}

TEST(CentredPerm, NormalFormIdentifiesCommutedWords) {
  const std::vector<CentredPerm> a{single_point(3), single_point(1), single_point(2)};
  const std::vector<CentredPerm> b{single_point(1), single_point(3), single_point(2)};
  EXPECT_EQ(normal_form(a), normal_form(b));
  const std::vector<CentredPerm> c{single_point(1), single_point(2), single_point(3)};
  EXPECT_NE(normal_form(a), normal_form(c));
}

TEST(CentredPerm, WithoutAndRestrict) {
  const auto p = P("426[3]51");
  const std::vector<std::size_t> drop{0, 5};
  EXPECT_EQ(p.without(drop).to_string(), "14[2]3");
  const std::vector<std::size_t> keep{1, 3};
  EXPECT_EQ(p.restricted_to(keep).to_string(), "1[2]");
}
