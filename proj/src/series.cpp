#include "pinclass/series.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "pinclass/errors.hpp"

namespace pinclass {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& q : c_) q.canonicalize();
  trim();
}

Poly::Poly(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational Poly::eval(const Rational& z) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading();
  return inv * *this;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& q : r.c_) q = -q;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(out));
}

Poly operator*(const Rational& s, const Poly& p) {
  if (sgn(s) == 0) return Poly();
  Poly r = p;
  for (auto& q : r.c_) q *= s;
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw PinError(ErrorKind::DivisionByZero, "polynomial division by zero");
  std::vector<Rational> rem = a.c_;
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1, Rational(0));
  const Rational lead = b.leading();
  for (std::size_t k = quo.size(); k-- > 0;) {
    Rational q = rem[k + b.c_.size() - 1] / lead;
    quo[k] = q;
    if (sgn(q) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= q * b.c_[j];
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

std::string rational_text(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (sgn(c) == 0) continue;
    const bool neg = sgn(c) < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mag_text = rational_text(mag);
    if (mag.get_den() != 1 && i > 0) mag_text = "(" + mag_text + ")";
    if (i == 0)
      out += mag_text;
    else {
      if (mag != 1) out += mag_text;
      out += "z";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    auto r = Poly::divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

namespace {

struct PolyParser {
  std::string s;
  std::size_t i = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw PinError(ErrorKind::MalformedSyntax, why + " at offset " + std::to_string(i) + " in polynomial '" + s + "'");
  }
  bool at_end() const { return i >= s.size(); }
  char peek() const { return at_end() ? '\0' : s[i]; }

  std::string digits() {
    std::size_t start = i;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(start, i - start);
  }

  // Number with optional /denominator, decimal point and exponent.
  std::optional<Rational> number() {
    if (!std::isdigit(static_cast<unsigned char>(peek())) && peek() != '.') return std::nullopt;
    std::size_t start = i;
    digits();
    if (peek() == '.') {
      ++i;
      digits();
    }
    if (peek() == 'e' && i + 1 < s.size() && (std::isdigit(static_cast<unsigned char>(s[i + 1])) || s[i + 1] == '-' || s[i + 1] == '+')) {
      ++i;
      if (peek() == '-' || peek() == '+') ++i;
      if (digits().empty()) fail("bad exponent");
    }
    Rational q = parse_rational(s.substr(start, i - start));
    if (peek() == '/') {
      ++i;
      std::string d = digits();
      if (d.empty()) fail("missing denominator");
      Rational den{mpz_class(d, 10)};
      if (sgn(den) == 0) throw PinError(ErrorKind::DivisionByZero, "zero denominator in polynomial '" + s + "'");
      q /= den;
    }
    return q;
  }

  Poly term() {
    Rational coeff = 1;
    bool have_coeff = false;
    if (peek() == '(') {
      ++i;
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++i;
      }
      auto q = number();
      if (!q || peek() != ')') fail("bad parenthesised coefficient");
      ++i;
      coeff = neg ? Rational(-*q) : *q;
      have_coeff = true;
    } else if (auto q = number()) {
      coeff = *q;
      have_coeff = true;
    }
    if (peek() == '*') {
      if (!have_coeff) fail("stray '*'");
      ++i;
      if (peek() != 'z') fail("expected z after '*'");
    }
    std::size_t degree = 0;
    if (peek() == 'z') {
      ++i;
      degree = 1;
      if (peek() == '^') {
        ++i;
        std::string d = digits();
        if (d.empty() || d.size() > 4) fail("bad exponent");
        degree = std::stoul(d);
      }
    } else if (!have_coeff) {
      fail("expected a term");
    }
    return Poly::monomial(coeff, degree);
  }

  Poly parse() {
    if (s.empty()) throw PinError(ErrorKind::EmptyInput, "empty polynomial");
    Poly acc;
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++i;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Poly t = term();
      acc += sign < 0 ? -t : t;
      first = false;
    }
    return acc;
  }
};

}  // namespace

Poly parse_poly(std::string_view text) {
  PolyParser p;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    char l = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    p.s.push_back(l == 'x' ? 'z' : l);
  }
  return p.parse();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw PinError(ErrorKind::MalformedSyntax, "empty number");
  try {
    if (s.find_first_of(".eE") == std::string::npos) {
      Rational q(s, 10);
      if (sgn(q.get_den()) == 0) throw PinError(ErrorKind::DivisionByZero, "zero denominator in '" + s + "'");
      q.canonicalize();
      return q;
    }
    std::size_t epos = s.find_first_of("eE");
    std::string mant = s.substr(0, epos);
    long exp10 = epos == std::string::npos ? 0 : std::stol(s.substr(epos + 1));
    bool neg = !mant.empty() && mant[0] == '-';
    if (neg || (!mant.empty() && mant[0] == '+')) mant.erase(0, 1);
    std::size_t dot = mant.find('.');
    if (dot != std::string::npos) {
      exp10 -= static_cast<long>(mant.size() - dot - 1);
      mant.erase(dot, 1);
    }
    if (mant.empty() || mant.find_first_not_of("0123456789") != std::string::npos) throw std::invalid_argument(s);
    Rational q{mpz_class(mant, 10)};
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    if (exp10 < 0)
      q /= p10;
    else
      q *= p10;
    return neg ? Rational(-q) : q;
  } catch (const PinError&) {
    throw;
  } catch (const std::exception&) {
    throw PinError(ErrorKind::MalformedSyntax, "'" + s + "' is not a number");
  }
}

std::string decimal_text(const Rational& q, int significant) {
  if (sgn(q) <= 0) throw PinError(ErrorKind::BoundViolation, "decimal rendering expects a positive value");
  mpz_class lo, hi;
  mpz_ui_pow_ui(lo.get_mpz_t(), 10, static_cast<unsigned long>(significant - 1));
  hi = lo * 10;
  Rational scaled = q;
  int shift = 0;  // value = scaled * 10^-shift
  while (scaled >= hi) {
    scaled /= 10;
    --shift;
  }
  while (scaled < lo) {
    scaled *= 10;
    ++shift;
  }
  Rational half(1, 2);
  Rational r = scaled + half;
  mpz_class n = r.get_num() / r.get_den();
  if (n == hi) {
    n = lo;
    --shift;
  }
  std::string digits = n.get_str();
  if (shift <= 0) return digits + std::string(static_cast<std::size_t>(-shift), '0');
  if (static_cast<std::size_t>(shift) >= digits.size())
    return "0." + std::string(static_cast<std::size_t>(shift) - digits.size(), '0') + digits;
  return digits.substr(0, digits.size() - shift) + "." + digits.substr(digits.size() - shift);
}

RatGF::RatGF(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw PinError(ErrorKind::DivisionByZero, "rational function with zero denominator");
  normalise();
}

void RatGF::normalise() {
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Poly::divmod(num_, g).first;
    den_ = Poly::divmod(den_, g).first;
  }
  const Rational scale = sgn(den_.coeff(0)) != 0 ? den_.coeff(0) : den_.leading();
  const Rational inv = 1 / scale;
  num_ = inv * num_;
  den_ = inv * den_;
}

RatGF operator+(const RatGF& a, const RatGF& b) {
  if (a.den_ == b.den_) return RatGF(a.num_ + b.num_, a.den_);
  return RatGF(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatGF operator-(const RatGF& a, const RatGF& b) {
  if (a.den_ == b.den_) return RatGF(a.num_ - b.num_, a.den_);
  return RatGF(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatGF operator*(const RatGF& a, const RatGF& b) { return RatGF(a.num_ * b.num_, a.den_ * b.den_); }

RatGF operator/(const RatGF& a, const RatGF& b) {
  if (b.is_zero()) throw PinError(ErrorKind::DivisionByZero, "division by the zero rational function");
  return RatGF(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatGF::to_string() const {
  if (den_ == Poly::constant(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatGF from_eventually_periodic(const std::vector<long>& initial, const std::vector<long>& period, std::size_t from_index) {
  if (from_index < 1 || initial.size() + 1 != from_index)
    throw PinError(ErrorKind::IndexOutOfRange, "initial terms must cover indices 1..n0-1");
  if (period.empty()) throw PinError(ErrorKind::EmptyInput, "empty period");
  std::vector<Rational> head(from_index, Rational(0));
  for (std::size_t k = 0; k < initial.size(); ++k) head[k + 1] = initial[k];
  const std::size_t p = period.size();
  std::vector<Rational> tail(from_index + p, Rational(0));
  for (std::size_t k = 0; k < p; ++k) tail[from_index + k] = period[k];
  // tail / (1 - z^p)
  Poly den = Poly::constant(1) - Poly::monomial(1, p);
  return RatGF(Poly(std::move(head)) * den + Poly(std::move(tail)), den);
}

RatGF from_eventually_constant(const std::vector<long>& initial, long constant, std::size_t from_index) {
  return from_eventually_periodic(initial, {constant}, from_index);
}

RatGF seq(const RatGF& g) {
  if (sgn(g.num().coeff(0)) != 0 && sgn(g.den().coeff(0)) != 0)
    throw PinError(ErrorKind::NonzeroConstantTerm, "Seq needs G(0) = 0, got G = " + g.to_string());
  if (sgn(g.den().coeff(0)) == 0) throw PinError(ErrorKind::PoleAtZero, "Seq argument has a pole at 0");
  return RatGF(g.den(), g.den() - g.num());
}

std::vector<Rational> coeffs(const RatGF& f, std::size_t n) {
  const Poly& den = f.den();
  if (sgn(den.coeff(0)) == 0) throw PinError(ErrorKind::PoleAtZero, "denominator vanishes at 0 in " + f.to_string());
  const Rational d0 = den.coeff(0);
  std::vector<Rational> a(n + 1, Rational(0));
  for (std::size_t k = 0; k <= n; ++k) {
    Rational acc = f.num().coeff(k);
    const std::size_t top = std::min<std::size_t>(k, static_cast<std::size_t>(std::max(den.degree(), 0)));
    for (std::size_t j = 1; j <= top; ++j) acc -= den.coeff(j) * a[k - j];
    a[k] = acc / d0;
  }
  return a;
}

}  // namespace pinclass
