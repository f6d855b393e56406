#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pinclass {

/// Quadrant number relative to the origin, 1..4, numbered anticlockwise
/// starting from the upper right.
using Quadrant = int;

/// A permutation of length n+1 with one designated origin entry.
///
/// Entries are stored in one-line order as 1-based values; the origin is
/// addressed by its 0-based position. The origin does not count towards
/// length(). Two values are equal only if both the filled permutation and the
/// origin position agree.
class CentredPerm {
 public:
  /// The empty centred permutation: the origin alone.
  CentredPerm() : filled_{1}, origin_(0) {}

  /// Throws PinError(NotAPermutation) if `filled` is not a bijection on
  /// 1..size, or IndexOutOfRange if `origin` is not a position.
  CentredPerm(std::vector<int> filled, std::size_t origin);

  /// Parses bracket notation: "426[3]51", or "4,2,6,[3],5,1" when entries
  /// exceed 9.
  static CentredPerm from_oneline(std::string_view text);

  std::size_t length() const { return filled_.size() - 1; }
  std::size_t size() const { return filled_.size(); }
  std::size_t origin() const { return origin_; }
  int value(std::size_t pos) const { return filled_[pos]; }
  int origin_value() const { return filled_[origin_]; }
  std::span<const std::uint8_t> filled() const { return filled_; }
  std::vector<int> filled_values() const { return {filled_.begin(), filled_.end()}; }

  /// Quadrant of the entry at `pos` (which must not be the origin).
  Quadrant quadrant_of(std::size_t pos) const;

  /// The underlying uncentred permutation (origin removed, re-ranked).
  std::vector<int> strip_origin() const;

  /// Deletes the non-origin entries at the given positions and re-ranks.
  CentredPerm without(std::span<const std::size_t> positions) const;

  /// Keeps only the entries at the given positions (which must include the
  /// origin) and re-ranks.
  CentredPerm restricted_to(std::span<const std::size_t> positions) const;

  std::string to_string() const;

  friend bool operator==(const CentredPerm&, const CentredPerm&) = default;
  friend auto operator<=>(const CentredPerm& a, const CentredPerm& b) {
    if (auto c = a.filled_.size() <=> b.filled_.size(); c != 0) return c;
    if (auto c = a.filled_ <=> b.filled_; c != 0) return c;
    return a.origin_ <=> b.origin_;
  }

  std::size_t hash() const noexcept;

 private:
  struct Unchecked {};
  CentredPerm(Unchecked, std::vector<std::uint8_t> filled, std::size_t origin)
      : filled_(std::move(filled)), origin_(origin) {}

  friend CentredPerm box_sum(const CentredPerm&, const CentredPerm&);
  friend CentredPerm rerank(std::span<const int>, std::size_t);

  std::vector<std::uint8_t> filled_;
  std::size_t origin_;
};

struct CentredPermHash {
  std::size_t operator()(const CentredPerm& p) const noexcept { return p.hash(); }
};

/// Builds a centred permutation from arbitrary distinct values in x-order.
CentredPerm rerank(std::span<const int> values, std::size_t origin);

/// mu_q: a single point in quadrant q.
CentredPerm single_point(Quadrant q);

struct QuadrantProfile {
  std::array<std::size_t, 4> counts{};  // counts[q-1]

  bool occupied(Quadrant q) const { return counts[q - 1] > 0; }
  std::size_t occupied_count() const;
};

QuadrantProfile quadrant_profile(const CentredPerm& p);

/// The quadrant holding every point of p, if p is non-empty and one-quadrant.
std::optional<Quadrant> one_quadrant(const CentredPerm& p);

/// True iff exactly one quadrant is occupied or two occupied quadrants are
/// adjacent.
bool adjacency_condition(const QuadrantProfile& profile);

/// Origin-pinned pattern containment.
bool contains(const CentredPerm& big, const CentredPerm& small);

/// inner ⊞ outer: the origin of `outer` is inflated by a copy of `inner`.
CentredPerm box_sum(const CentredPerm& inner, const CentredPerm& outer);

/// Left fold of box_sum; the empty list gives the empty permutation.
CentredPerm box_sum_all(std::span<const CentredPerm> parts);

/// A centred interval: positions [x_lo, x_hi] holding values [y_lo, y_hi],
/// always containing the origin.
struct CentredInterval {
  std::size_t x_lo;
  std::size_t x_hi;
  int y_lo;
  int y_hi;

  std::size_t point_count() const { return x_hi - x_lo; }
  friend bool operator==(const CentredInterval&, const CentredInterval&) = default;
};

/// All centred intervals (trivial and whole included).
std::vector<CentredInterval> centred_intervals(const CentredPerm& p);

/// The minimal non-trivial centred intervals: one, or two one-quadrant
/// intervals in opposite quadrants. Throws EmptyPermutation for length 0.
std::vector<CentredInterval> minimal_centred_intervals(const CentredPerm& p);

/// Splits p = inner ⊞ outer along a centred interval.
std::pair<CentredPerm, CentredPerm> split_at(const CentredPerm& p, const CentredInterval& interval);

bool is_box_indecomposable(const CentredPerm& p);

/// Greedy decomposition into ⊞-indecomposables; when two minimal intervals
/// exist the one in the lower-numbered quadrant is extracted first.
std::vector<CentredPerm> box_decompose(const CentredPerm& p);

/// Indecomposables commute under ⊞ iff equal or one-quadrant in opposite
/// quadrants.
bool commutes(const CentredPerm& a, const CentredPerm& b);

/// Lexicographic trace normal form of a decomposition: commuting elements are
/// moved forward while that yields a smaller key (quadrant, length, text).
std::vector<CentredPerm> normal_form(std::span<const CentredPerm> decomposition);

}  // namespace pinclass

template <>
struct std::hash<pinclass::CentredPerm> {
  std::size_t operator()(const pinclass::CentredPerm& p) const noexcept { return p.hash(); }
};
