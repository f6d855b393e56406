#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pinclass/cperm.hpp"
#include "pinclass/pinword.hpp"

namespace pinclass {

enum class CensusMethod { Subset, Composition, Representation, Generators };

std::string_view method_name(CensusMethod m);

/// Enumeration sequence C_0..C_{n_max} of a centred class, optionally with the
/// members themselves (perms[n] sorted).
struct ClassCensus {
  std::string description;
  CensusMethod method = CensusMethod::Composition;
  std::size_t n_max = 0;
  std::vector<long> counts;
  std::vector<std::vector<CentredPerm>> perms;
  /// Subset method only: depth of the initial segment used, and whether the
  /// stopping rule was met (it is empirical, not a proof).
  std::size_t depth = 0;
  bool stable = true;

  bool retains_perms() const { return !perms.empty(); }
};

constexpr std::size_t kCensusLimit = 10'000'000;

struct CensusOptions {
  bool retain = true;
  unsigned jobs = 1;
  /// The subset method refuses n_max above this unless raised.
  std::size_t subset_guard = 6;
};

ClassCensus enumerate_class_subset(const PinSpec& spec, std::size_t n_max, const CensusOptions& opt = {});
ClassCensus enumerate_class_composition(const PinSpec& spec, std::size_t n_max, const CensusOptions& opt = {});
ClassCensus enumerate_pin_permutations(std::size_t n_max, const CensusOptions& opt = {});

/// ⊞-closure of a finite generating set, by composing the indecomposables in
/// its downward closure.
ClassCensus enumerate_generated_closure(const std::vector<CentredPerm>& generators, std::size_t n_max,
                                        const CensusOptions& opt = {});

struct PropertyReport {
  std::size_t checks = 0;
  bool supermultiplicative_checked = false;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// C_{m+n} ≥ C_{m-1}C_{n-1} and 144·C_{m+n} ≥ C_m·C_n when `closed` and
/// `adjacency`; C_n ≤ 12·C_{n-1} always.
PropertyReport property_suite(const ClassCensus& census, bool closed, bool adjacency);

struct UncentredReport {
  std::vector<long> uncentred;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Strips origins, dedupes, and checks C_n ≤ C°_n ≤ (n+1)²·C_n.
UncentredReport centred_uncentred_check(const ClassCensus& census);

}  // namespace pinclass
