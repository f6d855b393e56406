#pragma once

#include <string>
#include <vector>

#include "pinclass/series.hpp"

namespace pinclass {

/// Smallest positive real root z0 of `polynomial`, isolated in [lo, hi], and
/// its reciprocal rendered as a decimal.
struct GrowthResult {
  Rational lo;
  Rational hi;
  std::string decimal;
  Poly polynomial;

  /// Midpoint reciprocal as a double; convenience only.
  double value() const;
};

enum class GrowthTarget { DenominatorRoot, GEqualsOne };

/// Sturm chain of the square-free part of p.
std::vector<Poly> sturm_chain(const Poly& p);

/// Number of distinct real roots of p in (a, b].
std::size_t count_roots(const std::vector<Poly>& chain, const Rational& a, const Rational& b);

/// Default tolerance 10^-12.
Rational default_tolerance();

/// Isolates the smallest root of p in (0, upper] to width ≤ tol, with a Sturm
/// count certifying there is none in (0, lo]. Throws NoRootInRange.
GrowthResult smallest_positive_root(const Poly& p, const Rational& tol, int digits = 10,
                                    const Rational& upper = Rational(1, 2));

/// Growth rate of a generating function: the reciprocal of the smallest
/// positive root of its denominator, or of G(z) = 1 when `f` is G.
GrowthResult growth_rate(const RatGF& f, GrowthTarget target, const Rational& tol, int digits = 10);

}  // namespace pinclass
