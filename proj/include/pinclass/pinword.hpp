#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pinclass/cperm.hpp"

namespace pinclass {

enum class Direction : char { Up = 'u', Down = 'd', Left = 'l', Right = 'r' };

inline bool is_vertical(Direction d) { return d == Direction::Up || d == Direction::Down; }
inline char to_char(Direction d) { return static_cast<char>(d); }
Direction direction_from_char(char c);

/// A finite pin word: a quadrant numeral followed by letters of alternating
/// alignment. Its length counts the numeral.
struct PinWord {
  Quadrant quadrant = 1;
  std::vector<Direction> letters;

  std::size_t length() const { return 1 + letters.size(); }
  std::string to_string() const;

  friend bool operator==(const PinWord&, const PinWord&) = default;
  friend auto operator<=>(const PinWord& a, const PinWord& b) {
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    return a.to_string() <=> b.to_string();
  }
};

PinWord parse_pin_word(std::string_view text);

/// Throws AlignmentViolation if two adjacent letters share an alignment.
void check_alternation(std::span<const Direction> letters, std::string_view context);

/// An eventually periodic pin sequence prefix·cycle·cycle·…
///
/// Positions are 1-based: position 1 holds the numeral and position i ≥ 2
/// holds letter(i).
class PinSpec {
 public:
  PinSpec(PinWord prefix, std::vector<Direction> cycle);

  const PinWord& prefix() const { return prefix_; }
  const std::vector<Direction>& cycle() const { return cycle_; }
  std::size_t prefix_length() const { return prefix_.length(); }
  std::size_t period() const { return cycle_.size(); }

  Direction letter(std::size_t position) const;

  /// The finite initial segment w_{1,n}.
  PinWord initial(std::size_t n) const;

  /// Minimal period and shortest prefix describing the same infinite word.
  PinSpec canonical() const;

  /// Rotation-minimal, period-minimal cycle text; a cache key for the tail.
  std::string cycle_key() const;

  std::string to_string() const;

  /// Equality of the infinite words.
  friend bool operator==(const PinSpec& a, const PinSpec& b);

 private:
  PinWord prefix_;
  std::vector<Direction> cycle_;
};

PinSpec parse_pin_spec(std::string_view text);

enum class FactorMode { All, Recurrent };

/// w_{i,j}; the leading numeral of a factor with i ≥ 2 is the quadrant of p_i.
PinWord pin_factor(const PinSpec& spec, std::size_t i, std::size_t j);

/// w_{≥n}.
PinSpec left_truncate(const PinSpec& spec, std::size_t n);

/// Distinct pin factors of length n. All-mode scans start positions
/// 1..|prefix|+|cycle|+1; recurrent mode scans one full period of starts lying
/// past the prefix.
std::set<PinWord> enumerate_pin_factors(const PinSpec& spec, std::size_t n, FactorMode mode);

/// |prefix| + 2|cycle| + 2.
std::size_t stabilization_window(const PinSpec& spec);

/// Factor counts for lengths 1..up_to (index 0 unused).
std::vector<std::size_t> factor_counts(const PinSpec& spec, std::size_t up_to, FactorMode mode);

bool is_recurrent(const PinSpec& spec);

}  // namespace pinclass
