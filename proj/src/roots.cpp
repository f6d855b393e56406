#include "pinclass/roots.hpp"

#include "pinclass/errors.hpp"

namespace pinclass {

namespace {

int sign_variations(const std::vector<Poly>& chain, const Rational& x) {
  int variations = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

Poly square_free(const Poly& p) {
  Poly g = gcd(p, p.derivative());
  if (g.degree() <= 0) return p;
  return Poly::divmod(p, g).first;
}

}  // namespace

double GrowthResult::value() const { return 2.0 / Rational(lo + hi).get_d(); }

Rational default_tolerance() {
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, 12);
  return Rational(mpz_class(1), p10);
}

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(square_free(p));
  chain.push_back(chain.back().derivative());
  while (!chain.back().is_zero()) {
    Poly r = Poly::divmod(chain[chain.size() - 2], chain.back()).second;
    chain.push_back(-r);
  }
  chain.pop_back();
  return chain;
}

std::size_t count_roots(const std::vector<Poly>& chain, const Rational& a, const Rational& b) {
  if (chain.empty() || b <= a) return 0;
  return static_cast<std::size_t>(sign_variations(chain, a) - sign_variations(chain, b));
}

GrowthResult smallest_positive_root(const Poly& p, const Rational& tol, int digits, const Rational& upper) {
  if (sgn(tol) <= 0) throw PinError(ErrorKind::BoundViolation, "tolerance must be positive");
  if (p.degree() < 1) throw PinError(ErrorKind::NoRootInRange, "constant polynomial " + p.to_string() + " has no root");
  const auto chain = sturm_chain(p);
  const Rational zero = 0;
  if (count_roots(chain, zero, upper) == 0)
    throw PinError(ErrorKind::NoRootInRange, p.to_string() + " has no root in (0, " + rational_text(upper) + "]");

  Rational lo = 0, hi = upper;
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / 2;
    if (count_roots(chain, lo, mid) > 0)
      hi = mid;
    else
      lo = mid;
  }
  // Certificates: no root in (0, lo], exactly one in (lo, hi].
  if (count_roots(chain, zero, lo) != 0 || count_roots(chain, lo, hi) != 1)
    throw PinError(ErrorKind::NoRootInRange, "root isolation certificate failed for " + p.to_string());
  const Poly& sf = chain.front();
  if (sf.sign_at(hi) != 0 && sf.sign_at(lo) == sf.sign_at(hi))
    throw PinError(ErrorKind::NoRootInRange, "no sign change across the isolating interval for " + p.to_string());
  if (sgn(lo) == 0) throw PinError(ErrorKind::NoRootInRange, "root too close to zero for " + p.to_string());

  GrowthResult r;
  r.lo = lo;
  r.hi = hi;
  r.polynomial = p;
  r.decimal = decimal_text(Rational(2) / (lo + hi), digits);
  return r;
}

GrowthResult growth_rate(const RatGF& f, GrowthTarget target, const Rational& tol, int digits) {
  if (target == GrowthTarget::DenominatorRoot) return smallest_positive_root(f.den(), tol, digits);
  const Poly eq = f.num() - f.den();
  auto r = smallest_positive_root(eq, tol, digits);
  // G must be analytic up to the root it is solved at.
  const auto pole_chain = sturm_chain(f.den());
  if (!pole_chain.empty() && f.den().degree() > 0 && count_roots(pole_chain, Rational(0), r.hi) != 0)
    throw PinError(ErrorKind::NoRootInRange, "G has a singularity before G = 1 in " + f.to_string());
  return r;
}

}  // namespace pinclass
