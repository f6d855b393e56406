#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pinclass/cperm.hpp"
#include "pinclass/pinword.hpp"

namespace pinclass {

/// One of the eight symmetries of the square: optionally swap the axes, then
/// optionally negate x and/or y.
struct Symmetry {
  bool swap_axes = false;
  bool flip_x = false;
  bool flip_y = false;

  std::string name() const;
};

const std::array<Symmetry, 8>& square_symmetries();

Direction apply(const Symmetry& s, Direction d);
Quadrant apply(const Symmetry& s, Quadrant q);
PinWord apply(const Symmetry& s, const PinWord& w);
CentredPerm apply(const Symmetry& s, const CentredPerm& p);

/// A word family head·unit^k·tail, e.g. "1" "ur" "uld" for 1(ur)^k uld.
struct WordPattern {
  std::string head;
  std::string unit;
  std::string tail;

  bool matches(const std::string& word) const;
  /// The unique member of the given length, if any.
  std::optional<std::string> expand(std::size_t length) const;
  WordPattern transformed(const Symmetry& s) const;
  std::string to_string() const;
};

/// A table row of decomposable words: the symmetry orbit of `representative`,
/// valid for lengths in [min_length, max_length].
struct DecomposableFamily {
  std::string name;
  WordPattern representative;
  std::size_t min_length;
  std::size_t max_length;
};

/// A table row of collisions: the orbit of one colliding tuple.
struct CollisionFamily {
  std::string name;
  std::vector<WordPattern> members;
  std::size_t min_length;
  std::size_t max_length;
};

const std::vector<DecomposableFamily>& decomposable_families();
const std::vector<CollisionFamily>& collision_families();

bool is_decomposable_word(const PinWord& w);

/// The full colliding set containing w ({w} when it collides with nothing).
std::set<PinWord> collision_group(const PinWord& w);

/// Closed-form table contents at a given length.
std::set<PinWord> table_decomposables(std::size_t length);
std::set<std::set<PinWord>> table_collision_groups(std::size_t length);

/// All 4 (length 1) or 2^{n+2} pin words of length n, in lexicographic order.
std::vector<PinWord> all_pin_words(std::size_t length);

struct ClassificationReport {
  std::size_t length = 0;
  std::size_t word_count = 0;
  std::set<PinWord> decomposable_words;
  std::set<std::set<PinWord>> collision_groups;
  bool table_match = false;
  std::vector<std::string> discrepancies;
};

/// Exhaustive re-derivation of both tables for lengths 1..n_max.
std::vector<ClassificationReport> verify_tables(std::size_t n_max, unsigned jobs = 1);

/// For each length n, Σ over table collision groups of (present members - 1).
/// `factors_by_length[n]` holds the factor set of length n.
std::vector<long> overcount_series(const std::vector<std::set<PinWord>>& factors_by_length);

}  // namespace pinclass
