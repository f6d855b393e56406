#include <gtest/gtest.h>

#include <cmath>

#include "pinclass/errors.hpp"
#include "pinclass/roots.hpp"
#include "pinclass/series.hpp"
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

}  // namespace

TEST(Poly, ParseAndPrint) {
  EXPECT_EQ(parse_poly("1-2z-z^3").to_string(), "1 - 2z - z^3");
  EXPECT_EQ(parse_poly("1 - 4*z + 2z^2"), Poly({1, -4, 2}));
  EXPECT_EQ(parse_poly("(3/2)z^2 - 1/2"), Poly({Rational(-1, 2), Rational(0), Rational(3, 2)}));
  EXPECT_EQ(parse_poly("3/2z^2"), Poly({Rational(0), Rational(0), Rational(3, 2)}));
  EXPECT_EQ(parse_poly("1 + x"), Poly({1, 1}));
  EXPECT_EQ(parse_poly("0").degree(), -1);
  EXPECT_EQ(error_of([] { parse_poly("1 + + "); }), ErrorKind::MalformedSyntax);
  EXPECT_EQ(error_of([] { parse_poly("1/0 z"); }), ErrorKind::DivisionByZero);
}

TEST(Poly, Arithmetic) {
  const Poly a{1, -1};
  const Poly b{1, 1};
  EXPECT_EQ(a * b, Poly({1, 0, -1}));
  EXPECT_EQ(a + b, Poly({2}));
  EXPECT_EQ((a - a).degree(), -1);
  const auto [q, r] = Poly::divmod(Poly({1, 0, -1}), a);
  EXPECT_EQ(q, b);
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(error_of([&] { Poly::divmod(a, Poly()); }), ErrorKind::DivisionByZero);
  EXPECT_EQ(gcd(Poly({1, 0, -1}), Poly({-1, 1})), Poly({-1, 1}));
  EXPECT_EQ(Poly({1, 2, 3}).derivative(), Poly({2, 6}));
  EXPECT_EQ(Poly({1, 2, 3}).eval(Rational(1, 2)), Rational(11, 4));
}

TEST(RatGF, NormalisesByGcd) {
  const RatGF f(Poly({1, 0, -1}), Poly({1, -2, 1}));
  EXPECT_EQ(f, gf("1+z", "1-z"));
  const RatGF g(Poly({2}), Poly({4, -4}));
  EXPECT_EQ(g.den().coeff(0), 1);
  EXPECT_EQ(g, gf("1/2", "1-z"));
}

TEST(RatGF, Coefficients) {
  EXPECT_EQ(long_coeffs(gf("1", "1-z-z^2"), 7), (std::vector<long>{1, 1, 2, 3, 5, 8, 13, 21}));
  EXPECT_EQ(long_coeffs(gf("1-z", "1-2z-z^3"), 6), (std::vector<long>{1, 1, 2, 5, 11, 24, 53}));
  EXPECT_EQ(error_of([] { coeffs(gf("1", "z"), 3); }), ErrorKind::PoleAtZero);
}

TEST(RatGF, Seq) {
  EXPECT_EQ(seq(gf("z+z^3", "1-z")), gf("1-z", "1-2z-z^3"));
  EXPECT_EQ(error_of([] { seq(gf("1+z", "1")); }), ErrorKind::NonzeroConstantTerm);
}

TEST(RatGF, FromEventuallyPeriodic) {
  const auto f = from_eventually_constant({3, 1}, 4, 3);
  EXPECT_EQ(long_coeffs(f, 6), (std::vector<long>{0, 3, 1, 4, 4, 4, 4}));
  const auto g = from_eventually_periodic({1}, {2, 5}, 2);
  EXPECT_EQ(long_coeffs(g, 6), (std::vector<long>{0, 1, 2, 5, 2, 5, 2}));
}

TEST(Rationals, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("1e-3"), Rational(1, 1000));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(rational_text(Rational(-3, 2)), "-3/2");
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("010"), Rational(10));
  EXPECT_EQ(decimal_text(Rational(2, 3), 4), "0.6667");
  EXPECT_EQ(error_of([] { parse_rational("1/0"); }), ErrorKind::DivisionByZero);
  EXPECT_EQ(error_of([] { parse_rational("abc"); }), ErrorKind::MalformedSyntax);
}

TEST(Roots, SturmCounts) {
  const Poly p = Poly({-1, 0, 1}) * Poly({-1, 0, 0, 1});  // (z^2-1)(z^3-1)
  const auto chain = sturm_chain(p);
  EXPECT_EQ(count_roots(chain, Rational(-2), Rational(2)), 2u);
  EXPECT_EQ(count_roots(chain, Rational(0), Rational(1)), 1u);
  EXPECT_EQ(count_roots(chain, Rational(1), Rational(2)), 0u);
}

TEST(Roots, SmallestPositiveRoot) {
  const auto tol = default_tolerance();
  const auto r = smallest_positive_root(parse_poly("1-4z+2z^2"), tol);
  EXPECT_LE(r.hi - r.lo, tol);
  EXPECT_NEAR(r.value(), 2 + std::sqrt(2.0), 1e-9);
  EXPECT_EQ(r.decimal, "3.414213562");
  const auto half = smallest_positive_root(parse_poly("1-2z"), tol);
  EXPECT_NEAR(half.value(), 2.0, 1e-9);
  EXPECT_EQ(error_of([&] { smallest_positive_root(parse_poly("1+z"), tol); }), ErrorKind::NoRootInRange);
}

TEST(Roots, GrowthTargetsAgree) {
  const auto G = gf("z+z^3", "1-z");
  const auto tol = default_tolerance();
  const auto a = growth_rate(seq(G), GrowthTarget::DenominatorRoot, tol);
  const auto b = growth_rate(G, GrowthTarget::GEqualsOne, tol);
  EXPECT_NEAR(a.value(), b.value(), 1e-10);
  EXPECT_NEAR(a.value(), 2.20557, 1e-5);
}
