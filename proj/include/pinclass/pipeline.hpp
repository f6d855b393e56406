#pragma once

#include <array>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "pinclass/cperm.hpp"
#include "pinclass/pinword.hpp"
#include "pinclass/roots.hpp"
#include "pinclass/series.hpp"

namespace pinclass {

/// Indecomposable counts g, the one-quadrant parts g1..g4, and the amended
/// G = g - g1·g3 - g2·g4.
struct GSequence {
  RatGF g;
  std::array<RatGF, 4> gq;
  RatGF G;
};

struct IndecomposableCounts {
  /// counts[n] for n = 1..window+period (index 0 unused).
  std::vector<long> counts;
  std::array<std::vector<long>, 4> quadrant_counts;
  RatGF g;
  std::array<RatGF, 4> gq;
};

IndecomposableCounts indecomposable_counts(const PinSpec& spec, FactorMode mode);
RatGF quadrant_indecomposable_counts(const PinSpec& spec, Quadrant q, FactorMode mode);

/// Throws BoundViolation unless a1 ∈ {1..4} and -8n ≤ a_n < 2^{n+2} for
/// 2 ≤ n ≤ 30, all integers.
void check_G_bounds(const RatGF& G);

GSequence assemble_G(const RatGF& g, const std::array<RatGF, 4>& gq);
GSequence amended_G(const PinSpec& spec, FactorMode mode);

/// Requires a recurrent spec (NotRecurrent otherwise).
RatGF class_gf(const PinSpec& spec);
RatGF closure_gf(const PinSpec& spec);
RatGF interior_gf(const PinSpec& spec);

/// Downward closure (origin-pinned patterns) of a finite set, including the
/// empty permutation.
std::set<CentredPerm> downward_closure(const std::vector<CentredPerm>& generators);

GSequence finite_closure_G(const std::vector<CentredPerm>& generators);
RatGF finite_closure_gf(const std::vector<CentredPerm>& generators);

/// Generating function of all pin words whose points stay in `quadrants`.
RatGF confined_word_gf(const std::set<Quadrant>& quadrants);
GSequence complete_class_G(const std::set<Quadrant>& quadrants);
RatGF complete_class_gf(const std::set<Quadrant>& quadrants);

/// Parses "1,2" or "1234" into a quadrant set.
std::set<Quadrant> parse_quadrants(std::string_view text);

/// Growth rate of the increasing oscillations, the smallest pin-class rate.
const GrowthResult& kappa();

/// True iff G(x) > 0 at `samples` evenly spaced rationals strictly inside (0, alpha).
bool G_positive_below(const RatGF& G, const Rational& alpha, int samples = 100);

struct TruncationStep {
  std::size_t t;
  std::size_t n_t;
  GrowthResult growth;
};

/// n(t) is the smallest n for which every factor of w_{≥n} of length ≤ t
/// recurs in w; each step records the growth rate of the closure of w_{≥n(t)}.
std::vector<TruncationStep> truncation_convergence(const PinSpec& spec, std::size_t t_max, const Rational& tol);

struct TruncationCheck {
  bool decreasing = true;
  bool above_interior = true;
  bool within_envelope = true;
  double interior_growth = 0;
  std::vector<double> deviations;
  std::vector<double> envelope;
};

/// 16/(κ-2)·(2/κ)^t envelope check against the interior growth rate.
TruncationCheck check_truncation(const std::vector<TruncationStep>& steps, const GrowthResult& interior);

enum class GfMode { Class, Closure, Interior };

std::string_view mode_name(GfMode m);

struct PipelineResult {
  std::string spec;
  GfMode mode;
  GSequence seq;
  RatGF f;
  GrowthResult growth;
};

PipelineResult run_pipeline(const PinSpec& spec, GfMode mode, const Rational& tol);

}  // namespace pinclass
