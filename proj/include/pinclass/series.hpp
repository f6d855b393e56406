#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pinclass {

using Rational = mpq_class;

/// Dense univariate polynomial in z with exact rational coefficients, in
/// ascending degree, with no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const { return c_.back(); }

  Rational eval(const Rational& z) const;
  int sign_at(const Rational& z) const { return sgn(eval(z)); }
  Poly derivative() const;
  Poly monic() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

  /// Ascending human form, e.g. "1 - 2z - z^3".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

/// Parses forms like "1-2z-z^3", "1 - 4*z + 2z^2", "(3/2)z^2 - 1/2".
Poly parse_poly(std::string_view text);

/// Exact rational function num/den in cancelled form, with den(0) = 1
/// whenever den(0) ≠ 0.
class RatGF {
 public:
  RatGF() : num_(), den_(Poly::constant(1)) {}
  RatGF(Poly num) : num_(std::move(num)), den_(Poly::constant(1)) {}  // NOLINT(implicit)
  RatGF(Poly num, Poly den);

  static RatGF constant(const Rational& c) { return RatGF(Poly::constant(c)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatGF operator+(const RatGF& a, const RatGF& b);
  friend RatGF operator-(const RatGF& a, const RatGF& b);
  friend RatGF operator*(const RatGF& a, const RatGF& b);
  friend RatGF operator/(const RatGF& a, const RatGF& b);
  friend bool operator==(const RatGF& a, const RatGF& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string to_string() const;

 private:
  void normalise();
  Poly num_;
  Poly den_;
};

/// Coefficients a_1..a_{n0-1} given by `initial`, then `constant` forever.
RatGF from_eventually_constant(const std::vector<long>& initial, long constant, std::size_t from_index);

/// Coefficients a_1..a_{n0-1} given by `initial`, then a_{n0+k} = period[k mod p].
RatGF from_eventually_periodic(const std::vector<long>& initial, const std::vector<long>& period, std::size_t from_index);

/// 1/(1-G); throws NonzeroConstantTerm unless G(0) = 0.
RatGF seq(const RatGF& g);

/// Taylor coefficients a_0..a_n; throws PoleAtZero when den(0) = 0.
std::vector<Rational> coeffs(const RatGF& f, std::size_t n);

/// "p" or "p/q".
std::string rational_text(const Rational& q);

/// Parses "p" or "p/q" (and plain decimals such as "1e-12" or "0.001").
Rational parse_rational(std::string_view text);

/// Rounds a positive rational to `significant` significant decimal digits.
std::string decimal_text(const Rational& q, int significant);

}  // namespace pinclass
