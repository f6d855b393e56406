#include <gtest/gtest.h>

#include "pinclass/classify.hpp"
#include "pinclass/errors.hpp"
#include "pinclass/pimap.hpp"
#include "pinclass/pipeline.hpp"
#include "support.hpp"

using namespace pinclass;
using testing_support::gf;
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

const Rational kTol = default_tolerance();

double rate(const RatGF& f) { return growth_rate(f, GrowthTarget::DenominatorRoot, kTol).value(); }

}  // namespace

TEST(ClassGf, Examples) {
  EXPECT_EQ(class_gf(parse_pin_spec("1(ru)*")), gf("1-z", "1-2z-z^3"));
  EXPECT_EQ(class_gf(parse_pin_spec("2(urul)*")), gf("1-z", "1-3z-2z^4"));
  EXPECT_EQ(class_gf(parse_pin_spec("1(uldlur)*")), gf("1-z", "1-4z+2z^2+z^3-z^4-2z^5-3z^6"));
  EXPECT_EQ(class_gf(parse_pin_spec("1(ldru)*")), gf("1-z", "1-5z+6z^2-2z^3-z^4-3z^5"));
}

TEST(ClassGf, QuadrantParts) {
  const auto y = amended_G(parse_pin_spec("1(uldlur)*"), FactorMode::All);
  EXPECT_EQ(y.gq[0], gf("z+z^2", "1"));
  EXPECT_EQ(y.gq[1], gf("z", "1"));
  EXPECT_EQ(y.gq[2], gf("z+z^2", "1"));
  EXPECT_TRUE(y.gq[3].is_zero());
  const auto w = amended_G(parse_pin_spec("1(ldru)*"), FactorMode::All);
  for (const auto& q : w.gq) EXPECT_EQ(q, gf("z", "1"));
  EXPECT_EQ(w.G, gf("4z-6z^2+2z^3+z^4+3z^5", "1-z"));
}

TEST(ClassGf, IndecomposableCountsMatchImages) {
  const auto spec = parse_pin_spec("1(uldlur)*");
  const auto ic = indecomposable_counts(spec, FactorMode::All);
  const auto direct = long_coeffs(ic.g, ic.counts.size() - 1);
  for (std::size_t n = 1; n < ic.counts.size(); ++n) {
    std::set<CentredPerm> imgs;
    for (const auto& w : enumerate_pin_factors(spec, n, FactorMode::All)) {
      const auto p = pi_map(w);
      if (is_box_indecomposable(p)) imgs.insert(p);
    }
    EXPECT_EQ(ic.counts[n], static_cast<long>(imgs.size())) << n;
    EXPECT_EQ(direct[n], ic.counts[n]);
  }
}

TEST(ClassGf, RequiresRecurrence) {
  EXPECT_EQ(error_of([] { class_gf(parse_pin_spec("1(ul)*")); }), ErrorKind::NotRecurrent);
  EXPECT_NO_THROW(closure_gf(parse_pin_spec("1(ul)*")));
  EXPECT_NO_THROW(interior_gf(parse_pin_spec("1(ul)*")));
}

TEST(ClassGf, ModesAgreeOnRecurrentSpecs) {
  for (const char* s : {"1(ru)*", "2(urul)*", "1(ldru)*"}) {
    const auto spec = parse_pin_spec(s);
    EXPECT_EQ(closure_gf(spec), class_gf(spec)) << s;
    EXPECT_EQ(interior_gf(spec), class_gf(spec)) << s;
  }
}

TEST(ClassGf, InteriorBelowClosure) {
  const auto spec = parse_pin_spec("1(ul)*");
  EXPECT_LE(rate(interior_gf(spec)), rate(closure_gf(spec)) + 1e-12);
}

TEST(Bounds, CheckGBounds) {
  EXPECT_NO_THROW(check_G_bounds(gf("z+z^3", "1-z")));
  EXPECT_EQ(error_of([] { check_G_bounds(gf("5z", "1")); }), ErrorKind::BoundViolation);
  EXPECT_EQ(error_of([] { check_G_bounds(RatGF(Poly({Rational(0), Rational(1), Rational(1, 2)}))); }), ErrorKind::BoundViolation);
  EXPECT_EQ(error_of([] { check_G_bounds(gf("z", "1-3z")); }), ErrorKind::BoundViolation);
}

TEST(FiniteClosure, Examples) {
  EXPECT_EQ(finite_closure_gf({CentredPerm::from_oneline("41[3]52")}), gf("1", "1-4z+2z^2-z^4"));
  std::vector<CentredPerm> points;
  for (Quadrant q = 1; q <= 4; ++q) points.push_back(single_point(q));
  EXPECT_EQ(finite_closure_gf(points), gf("1", "1-4z+2z^2"));
  EXPECT_NEAR(rate(finite_closure_gf({single_point(1), single_point(2), single_point(3)})), 2.61803, 1e-4);
  EXPECT_NEAR(rate(finite_closure_gf({CentredPerm::from_oneline("[1]32"), CentredPerm::from_oneline("23[1]")})), 2.73205, 1e-4);
}

TEST(FiniteClosure, DownwardClosure) {
  const auto down = downward_closure({CentredPerm::from_oneline("[1]32")});
  EXPECT_TRUE(down.count(CentredPerm()));
  EXPECT_TRUE(down.count(single_point(1)));
  EXPECT_EQ(down.size(), 3u);
}

TEST(CompleteClass, AllQuadrants) {
  EXPECT_EQ(complete_class_gf({1, 2, 3, 4}), gf("1-4z+5z^2-2z^3", "1-8z+19z^2-26z^3+14z^4-12z^5-8z^6+20z^7-8z^8"));
}

TEST(CompleteClass, TwoQuadrants) {
  const auto f = complete_class_gf({1, 2});
  EXPECT_EQ(f, gf("1-2z^2", "1-2z-4z^2-2z^3-8z^4-4z^5"));
  EXPECT_NEAR(rate(f), 3.51205, 1e-4);
}

TEST(CompleteClass, GSequence) {
  const auto s = complete_class_G({1, 2, 3, 4});
  const auto g = long_coeffs(s.g, 12);
  EXPECT_EQ(std::vector<long>(g.begin() + 1, g.begin() + 6), (std::vector<long>{4, 4, 16, 42, 100}));
  for (std::size_t n = 6; n <= 12; ++n) EXPECT_EQ(g[n], (1L << (n + 2)) - 24) << n;
  for (const auto& q : s.gq) EXPECT_EQ(q, gf("z+z^3", "1-z"));
}

TEST(CompleteClass, ConfinedWordsMatchEnumeration) {
  for (const std::set<Quadrant>& qs : {std::set<Quadrant>{1}, std::set<Quadrant>{1, 2}, std::set<Quadrant>{1, 2, 3}}) {
    const auto c = long_coeffs(confined_word_gf(qs), 9);
    for (std::size_t n = 1; n <= 9; ++n) {
      long count = 0;
      for (const auto& w : all_pin_words(n)) {
        const auto quads = point_quadrants(w);
        bool inside = true;
        for (std::size_t k = 1; k <= n; ++k) inside = inside && qs.count(quads[k]);
        count += inside;
      }
      EXPECT_EQ(c[n], count) << n;
    }
  }
}

TEST(CompleteClass, QuadrantValidation) {
  EXPECT_EQ(parse_quadrants("1,2"), (std::set<Quadrant>{1, 2}));
  EXPECT_EQ(parse_quadrants("1234"), (std::set<Quadrant>{1, 2, 3, 4}));
  EXPECT_EQ(error_of([] { parse_quadrants(""); }), ErrorKind::EmptyInput);
  EXPECT_EQ(error_of([] { parse_quadrants("5"); }), ErrorKind::MalformedSyntax);
  EXPECT_EQ(error_of([] { complete_class_gf({5}); }), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(error_of([] { complete_class_gf({1, 3}); }), ErrorKind::DisconnectedQuadrants);
}

TEST(Kappa, Value) {
  EXPECT_NEAR(kappa().value(), 2.20557, 1e-5);
  EXPECT_EQ(kappa().polynomial, parse_poly("1-2z-z^3"));
}

TEST(Positivity, InteriorG) {
  const auto spec = parse_pin_spec("1(ldru)*");
  const auto r = run_pipeline(spec, GfMode::Interior, kTol);
  EXPECT_TRUE(G_positive_below(r.seq.G, r.growth.lo));
}

TEST(Truncation, Convergence) {
  const auto spec = parse_pin_spec("1(ul)*");
  const auto steps = truncation_convergence(spec, 10, kTol);
  ASSERT_EQ(steps.size(), 10u);
  for (std::size_t i = 0; i < steps.size(); ++i) EXPECT_EQ(steps[i].t, i + 1);
  for (std::size_t i = 1; i < steps.size(); ++i) EXPECT_GE(steps[i].n_t, steps[i - 1].n_t);
  const auto interior = run_pipeline(spec, GfMode::Interior, kTol).growth;
  const auto check = check_truncation(steps, interior);
  EXPECT_TRUE(check.decreasing);
  EXPECT_TRUE(check.above_interior);
  EXPECT_TRUE(check.within_envelope);
}

TEST(Truncation, StrictDecreaseWithRecurringPrefixQuadrants) {
  const auto spec = parse_pin_spec("1rurur(dlur)*");
  const auto steps = truncation_convergence(spec, 10, kTol);
  const auto interior = run_pipeline(spec, GfMode::Interior, kTol).growth;
  EXPECT_GT(steps.front().growth.value(), steps.back().growth.value() + 0.1);
  EXPECT_NEAR(steps.back().growth.value(), interior.value(), 1e-10);
  const auto check = check_truncation(steps, interior);
  EXPECT_TRUE(check.decreasing && check.above_interior && check.within_envelope);
}

TEST(Truncation, GrowthInvariantOnRecurrentSpecs) {
  for (const char* s : {"1(ru)*", "1(uldlur)*"}) {
    const auto spec = parse_pin_spec(s);
    const double base = rate(class_gf(spec));
    for (std::size_t n = 1; n <= 8; ++n) EXPECT_NEAR(rate(class_gf(left_truncate(spec, n))), base, 1e-10) << s << " " << n;
  }
}

TEST(Pipeline, Modes) {
  const auto r = run_pipeline(parse_pin_spec("2(urul)*"), GfMode::Class, kTol);
  EXPECT_EQ(r.f, gf("1-z", "1-3z-2z^4"));
  EXPECT_NEAR(r.growth.value(), 3.06918, 1e-4);
  EXPECT_EQ(mode_name(GfMode::Closure), "closure");
}
