#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pinclass/cperm.hpp"
#include "pinclass/pinword.hpp"

namespace pinclass {

/// A realised pin word: point p_k sits at (x[k], y[k]) on a 0-based rank grid,
/// with p_0 the origin.
struct PinDiagram {
  std::vector<int> x;
  std::vector<int> y;
  CentredPerm perm;

  std::size_t point_count() const { return x.size(); }
  Quadrant quadrant(std::size_t k) const;
};

PinDiagram build_diagram(const PinWord& w);

CentredPerm pi_map(const PinWord& w);

/// Quadrant of p_k, 1 ≤ k ≤ length(w).
Quadrant point_quadrant(const PinWord& w, std::size_t k);

/// Quadrants of p_1..p_n (index 0 unused).
std::vector<Quadrant> point_quadrants(const PinWord& w);

/// w_{i,j} of a finite word.
PinWord word_factor(const PinWord& w, std::size_t i, std::size_t j);

/// (π(w_{1,k-1}), π(w_{k+1,n})) whose box sum is π(w) with p_k deleted.
std::pair<CentredPerm, CentredPerm> remove_interior_point(const PinWord& w, std::size_t k);

CentredPerm compose_representation(std::span<const PinWord> words);

/// Every legal letter appended to the last word, and every single-numeral word
/// appended to the list.
std::vector<std::vector<PinWord>> one_point_extension_candidates(const std::vector<PinWord>& rep);

std::string render_svg(const PinDiagram& d);
std::string render_ascii(const PinDiagram& d);

}  // namespace pinclass
