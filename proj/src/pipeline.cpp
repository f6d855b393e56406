#include "pinclass/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <map>

#include "pinclass/classify.hpp"
#include "pinclass/errors.hpp"
#include "pinclass/pimap.hpp"

namespace pinclass {

namespace {

RatGF eventually_constant_gf(const std::vector<long>& counts, std::size_t from) {
  std::vector<long> head(counts.begin() + 1, counts.begin() + static_cast<std::ptrdiff_t>(from));
  return from_eventually_constant(head, counts[from], from);
}

void require_constant(const std::vector<long>& counts, std::size_t from, const std::string& what) {
  for (std::size_t n = from + 1; n < counts.size(); ++n)
    if (counts[n] != counts[from])
      throw PinError(ErrorKind::StabilizationFailure, what + ": count at length " + std::to_string(n) + " is " +
                                                          std::to_string(counts[n]) + ", expected the stable value " +
                                                          std::to_string(counts[from]));
}

RatGF poly_gf(const std::vector<long>& counts) {
  std::vector<Rational> c;
  for (long v : counts) c.emplace_back(v);
  return RatGF(Poly(std::move(c)));
}

Poly determinant(std::vector<std::vector<Poly>> m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Poly det;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Poly term = m[0][col] * determinant(std::move(minor));
    det = col % 2 == 0 ? det + term : det - term;
  }
  return det;
}

constexpr std::array<Direction, 4> kDirections{Direction::Up, Direction::Down, Direction::Left, Direction::Right};

bool alternating(Direction a, Direction b) { return is_vertical(a) != is_vertical(b); }

// Quadrant of a point placed by letter `b` right after a point placed by
// letter `a`, read off the realised diagram.
Quadrant step_quadrant(Direction a, Direction b) {
  Quadrant q = point_quadrant(PinWord{1, {a, b}}, 3);
  for (Quadrant first = 2; first <= 4; ++first)
    if (point_quadrant(PinWord{first, {a, b}}, 3) != q)
      throw std::logic_error("point quadrant depends on more than the last two letters");
  return q;
}

bool confined(const PinWord& w, const std::set<Quadrant>& quadrants) {
  const auto qs = point_quadrants(w);
  for (std::size_t k = 1; k < qs.size(); ++k)
    if (!quadrants.count(qs[k])) return false;
  return true;
}

void validate_quadrants(const std::set<Quadrant>& quadrants) {
  if (quadrants.empty()) throw PinError(ErrorKind::EmptyInput, "no quadrants given");
  for (Quadrant q : quadrants)
    if (q < 1 || q > 4) throw PinError(ErrorKind::IndexOutOfRange, "quadrant " + std::to_string(q) + " is not in 1..4");
  if (quadrants.size() == 2) {
    const Quadrant a = *quadrants.begin(), b = *quadrants.rbegin();
    if (b - a == 2) throw PinError(ErrorKind::DisconnectedQuadrants, "quadrants " + std::to_string(a) + " and " + std::to_string(b) + " are opposite");
  }
}

}  // namespace

IndecomposableCounts indecomposable_counts(const PinSpec& spec, FactorMode mode) {
  const std::size_t window = stabilization_window(spec);
  const std::size_t top = window + spec.period();
  IndecomposableCounts out;
  out.counts.assign(top + 1, 0);
  for (auto& qc : out.quadrant_counts) qc.assign(top + 1, 0);

  std::vector<std::set<PinWord>> factors(top + 1);
  for (std::size_t n = 1; n <= top; ++n) {
    factors[n] = enumerate_pin_factors(spec, n, mode);
    std::set<CentredPerm> images;
    for (const auto& w : factors[n]) {
      auto p = pi_map(w);
      if (is_box_indecomposable(p)) images.insert(std::move(p));
    }
    out.counts[n] = static_cast<long>(images.size());
    for (const auto& p : images)
      if (auto q = one_quadrant(p)) ++out.quadrant_counts[*q - 1][n];
  }

  // Independent route through the classification tables.
  const auto over = overcount_series(factors);
  for (std::size_t n = 1; n <= top; ++n) {
    long dec = 0;
    for (const auto& w : factors[n]) dec += is_decomposable_word(w) ? 1 : 0;
    const long via_tables = static_cast<long>(factors[n].size()) - dec - over[n];
    if (via_tables != out.counts[n])
      throw PinError(ErrorKind::BoundViolation, "table cross-check disagrees at length " + std::to_string(n) + " for " +
                                                    spec.to_string() + ": direct " + std::to_string(out.counts[n]) +
                                                    ", tables " + std::to_string(via_tables));
  }

  const std::string label = spec.to_string();
  require_constant(out.counts, window, "indecomposable counts of " + label);
  out.g = eventually_constant_gf(out.counts, window);
  for (int q = 0; q < 4; ++q) {
    require_constant(out.quadrant_counts[q], window, "quadrant " + std::to_string(q + 1) + " counts of " + label);
    out.gq[q] = eventually_constant_gf(out.quadrant_counts[q], window);
  }
  return out;
}

RatGF quadrant_indecomposable_counts(const PinSpec& spec, Quadrant q, FactorMode mode) {
  if (q < 1 || q > 4) throw PinError(ErrorKind::IndexOutOfRange, "quadrant must be 1..4");
  return indecomposable_counts(spec, mode).gq[q - 1];
}

void check_G_bounds(const RatGF& G) {
  const auto a = coeffs(G, 30);
  for (std::size_t n = 0; n <= 30; ++n)
    if (a[n].get_den() != 1) throw PinError(ErrorKind::BoundViolation, "G has a non-integer coefficient at z^" + std::to_string(n));
  if (sgn(a[0]) != 0) throw PinError(ErrorKind::BoundViolation, "G(0) must vanish");
  if (a[1] < 1 || a[1] > 4) throw PinError(ErrorKind::BoundViolation, "G has a1 = " + rational_text(a[1]) + " outside 1..4");
  for (std::size_t n = 2; n <= 30; ++n) {
    mpz_class upper;
    mpz_ui_pow_ui(upper.get_mpz_t(), 2, n + 2);
    if (a[n] < -8 * static_cast<long>(n) || a[n] >= Rational(upper))
      throw PinError(ErrorKind::BoundViolation, "G coefficient a" + std::to_string(n) + " = " + rational_text(a[n]) + " out of bounds");
  }
}

GSequence assemble_G(const RatGF& g, const std::array<RatGF, 4>& gq) {
  GSequence s{g, gq, g - gq[0] * gq[2] - gq[1] * gq[3]};
  check_G_bounds(s.G);
  return s;
}

GSequence amended_G(const PinSpec& spec, FactorMode mode) {
  auto counts = indecomposable_counts(spec, mode);
  return assemble_G(counts.g, counts.gq);
}

RatGF class_gf(const PinSpec& spec) {
  if (!is_recurrent(spec))
    throw PinError(ErrorKind::NotRecurrent, spec.to_string() + " is not recurrent; use the closure or interior mode instead");
  return seq(amended_G(spec, FactorMode::All).G);
}

RatGF closure_gf(const PinSpec& spec) { return seq(amended_G(spec, FactorMode::All).G); }

RatGF interior_gf(const PinSpec& spec) { return seq(amended_G(spec, FactorMode::Recurrent).G); }

std::set<CentredPerm> downward_closure(const std::vector<CentredPerm>& generators) {
  std::set<CentredPerm> out;
  for (const auto& gen : generators) {
    const std::size_t n = gen.length();
    if (n > 20) throw PinError(ErrorKind::CensusTooLarge, "generator " + gen.to_string() + " is too long for a subset census");
    std::vector<std::size_t> points;
    for (std::size_t i = 0; i < gen.size(); ++i)
      if (i != gen.origin()) points.push_back(i);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<std::size_t> keep{gen.origin()};
      for (std::size_t b = 0; b < n; ++b)
        if (mask & (1u << b)) keep.push_back(points[b]);
      out.insert(gen.restricted_to(keep));
    }
  }
  return out;
}

GSequence finite_closure_G(const std::vector<CentredPerm>& generators) {
  if (generators.empty()) throw PinError(ErrorKind::EmptyInput, "no generators");
  const auto closure = downward_closure(generators);
  std::size_t longest = 0;
  for (const auto& p : closure) longest = std::max(longest, p.length());
  std::vector<long> g(longest + 1, 0);
  std::array<std::vector<long>, 4> gq;
  for (auto& v : gq) v.assign(longest + 1, 0);
  for (const auto& p : closure) {
    if (p.length() == 0 || !is_box_indecomposable(p)) continue;
    ++g[p.length()];
    if (auto q = one_quadrant(p)) ++gq[*q - 1][p.length()];
  }
  return assemble_G(poly_gf(g), {poly_gf(gq[0]), poly_gf(gq[1]), poly_gf(gq[2]), poly_gf(gq[3])});
}

RatGF finite_closure_gf(const std::vector<CentredPerm>& generators) { return seq(finite_closure_G(generators).G); }

RatGF confined_word_gf(const std::set<Quadrant>& quadrants) {
  validate_quadrants(quadrants);
  constexpr std::size_t kTerms = 40;
  std::array<std::array<bool, 4>, 4> allowed{};
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      allowed[a][b] = alternating(kDirections[a], kDirections[b]) && quadrants.count(step_quadrant(kDirections[a], kDirections[b]));

  std::vector<Rational> counts(kTerms + 1, Rational(0));
  counts[1] = static_cast<long>(quadrants.size());
  std::array<Rational, 4> v{};
  for (Quadrant q : quadrants)
    for (std::size_t x = 0; x < 4; ++x)
      if (quadrants.count(point_quadrant(PinWord{q, {kDirections[x]}}, 2))) v[x] += 1;
  for (std::size_t n = 2; n <= kTerms; ++n) {
    counts[n] = v[0] + v[1] + v[2] + v[3];
    std::array<Rational, 4> next{};
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b)
        if (allowed[a][b]) next[b] += v[a];
    v = next;
  }

  std::vector<std::vector<Poly>> m(4, std::vector<Poly>(4));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      m[a][b] = (a == b ? Poly::constant(1) : Poly()) - (allowed[a][b] ? Poly::monomial(1, 1) : Poly());
  const Poly den = determinant(m);
  const Poly series(counts);
  const Poly full = den * series;
  std::vector<Rational> num(full.coeffs().begin(), full.coeffs().begin() + std::min<std::ptrdiff_t>(7, full.degree() + 1));
  RatGF f(Poly(std::move(num)), den);
  if (coeffs(f, kTerms) != counts)
    throw PinError(ErrorKind::StabilizationFailure, "transfer-matrix word count does not match direct counts");
  return f;
}

GSequence complete_class_G(const std::set<Quadrant>& quadrants) {
  validate_quadrants(quadrants);
  const RatGF words = confined_word_gf(quadrants);

  constexpr std::size_t kFrom = 8;
  constexpr std::size_t kCheckTo = 24;
  std::vector<long> removed(kCheckTo + 1, 0);
  for (std::size_t n = 2; n <= kCheckTo; ++n) {
    for (const auto& w : table_decomposables(n))
      if (confined(w, quadrants)) ++removed[n];
    for (const auto& group : table_collision_groups(n)) {
      long hits = 0;
      for (const auto& w : group) hits += confined(w, quadrants) ? 1 : 0;
      if (hits > 1) removed[n] += hits - 1;
    }
  }
  for (std::size_t n = kFrom + 2; n <= kCheckTo; ++n)
    if (removed[n] != removed[n - 2])
      throw PinError(ErrorKind::StabilizationFailure, "table removals are not 2-periodic at length " + std::to_string(n));
  const RatGF table_part = from_eventually_periodic(std::vector<long>(removed.begin() + 1, removed.begin() + kFrom),
                                                    {removed[kFrom], removed[kFrom + 1]}, kFrom);
  const RatGF g = words - table_part;

  std::array<RatGF, 4> gq;
  for (Quadrant q : quadrants) gq[q - 1] = quadrants.size() == 1 ? g : complete_class_G({q}).g;
  return assemble_G(g, gq);
}

RatGF complete_class_gf(const std::set<Quadrant>& quadrants) { return seq(complete_class_G(quadrants).G); }

std::set<Quadrant> parse_quadrants(std::string_view text) {
  std::set<Quadrant> out;
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '{' || c == '}') continue;
    if (c < '1' || c > '4') throw PinError(ErrorKind::MalformedSyntax, "bad quadrant list '" + std::string(text) + "'");
    out.insert(c - '0');
  }
  if (out.empty()) throw PinError(ErrorKind::EmptyInput, "empty quadrant list");
  return out;
}

const GrowthResult& kappa() {
  static const GrowthResult k = smallest_positive_root(Poly{1, -2, 0, -1}, default_tolerance());
  return k;
}

bool G_positive_below(const RatGF& G, const Rational& alpha, int samples) {
  for (int i = 1; i <= samples; ++i) {
    Rational x = alpha * i / (samples + 1);
    if (sgn(G.num().eval(x)) * sgn(G.den().eval(x)) <= 0) return false;
  }
  return true;
}

std::vector<TruncationStep> truncation_convergence(const PinSpec& spec, std::size_t t_max, const Rational& tol) {
  std::vector<std::set<PinWord>> recurrent(t_max + 1);
  for (std::size_t len = 1; len <= t_max; ++len) recurrent[len] = enumerate_pin_factors(spec, len, FactorMode::Recurrent);
  const std::size_t scan_limit = spec.prefix_length() + spec.period() + 2;
  std::map<std::size_t, GrowthResult> growth_at;

  std::vector<TruncationStep> steps;
  for (std::size_t t = 1; t <= t_max; ++t) {
    std::size_t found = 0;
    for (std::size_t n = 1; n <= scan_limit && !found; ++n) {
      const PinSpec tail = left_truncate(spec, n);
      bool ok = true;
      for (std::size_t len = 1; len <= t && ok; ++len) {
        const auto f = enumerate_pin_factors(tail, len, FactorMode::All);
        ok = std::includes(recurrent[len].begin(), recurrent[len].end(), f.begin(), f.end());
      }
      if (ok) found = n;
    }
    if (!found)
      throw PinError(ErrorKind::ConvergenceNotReached, "no truncation of " + spec.to_string() + " has only recurrent factors up to length " + std::to_string(t));
    auto it = growth_at.find(found);
    if (it == growth_at.end())
      it = growth_at.emplace(found, growth_rate(closure_gf(left_truncate(spec, found)), GrowthTarget::DenominatorRoot, tol)).first;
    steps.push_back({t, found, it->second});
  }
  return steps;
}

TruncationCheck check_truncation(const std::vector<TruncationStep>& steps, const GrowthResult& interior) {
  TruncationCheck c;
  c.interior_growth = interior.value();
  const double k = kappa().value();
  constexpr double slack = 1e-9;
  double prev = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const double rho_t = steps[i].growth.value();
    if (i > 0 && rho_t > prev + slack) c.decreasing = false;
    if (rho_t < c.interior_growth - slack) c.above_interior = false;
    const double env = 16.0 / (k - 2.0) * std::pow(2.0 / k, static_cast<double>(steps[i].t));
    c.deviations.push_back(std::abs(rho_t - c.interior_growth));
    c.envelope.push_back(env);
    if (c.deviations.back() > env + slack) c.within_envelope = false;
    prev = rho_t;
  }
  return c;
}

std::string_view mode_name(GfMode m) {
  switch (m) {
    case GfMode::Class: return "class";
    case GfMode::Closure: return "closure";
    case GfMode::Interior: return "interior";
  }
  return "?";
}

PipelineResult run_pipeline(const PinSpec& spec, GfMode mode, const Rational& tol) {
  if (mode == GfMode::Class && !is_recurrent(spec))
    throw PinError(ErrorKind::NotRecurrent, spec.to_string() + " is not recurrent; use --mode closure or --mode interior");
  PipelineResult r{spec.to_string(), mode, amended_G(spec, mode == GfMode::Interior ? FactorMode::Recurrent : FactorMode::All), RatGF(), {}};
  r.f = seq(r.seq.G);
  r.growth = growth_rate(r.f, GrowthTarget::DenominatorRoot, tol);
  return r;
}

}  // namespace pinclass
