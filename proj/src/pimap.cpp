#include "pinclass/pimap.hpp"

#include <algorithm>
#include <stdexcept>

#include "pinclass/errors.hpp"

namespace pinclass {

namespace {

void place_extreme(std::vector<int>& order, int id, bool at_end) {
  if (at_end)
    order.push_back(id);
  else
    order.insert(order.begin(), id);
}

// `prev` is extreme in `order`; the new point goes just inside it.
void place_beside(std::vector<int>& order, int id, int prev) {
  auto it = std::find(order.begin(), order.end(), prev);
  if (it == order.end() - 1)
    order.insert(it, id);
  else if (it == order.begin())
    order.insert(it + 1, id);
  else
    throw std::logic_error("previous pin point is not extreme");
}

}  // namespace

Quadrant PinDiagram::quadrant(std::size_t k) const {
  if (k == 0 || k >= x.size()) throw PinError(ErrorKind::IndexOutOfRange, "no point p_" + std::to_string(k));
  const bool right = x[k] > x[0];
  const bool up = y[k] > y[0];
  if (right) return up ? 1 : 4;
  return up ? 2 : 3;
}

PinDiagram build_diagram(const PinWord& w) {
  if (w.quadrant < 1 || w.quadrant > 4) throw PinError(ErrorKind::MalformedSyntax, "quadrant numeral must be 1..4");
  std::vector<int> xs{0}, ys{0};
  xs.reserve(w.length() + 1);
  ys.reserve(w.length() + 1);
  place_extreme(xs, 1, w.quadrant == 1 || w.quadrant == 4);
  place_extreme(ys, 1, w.quadrant == 1 || w.quadrant == 2);
  int prev = 1;
  for (Direction d : w.letters) {
    const int id = prev + 1;
    switch (d) {
      case Direction::Up:
      case Direction::Down:
        place_extreme(ys, id, d == Direction::Up);
        place_beside(xs, id, prev);
        break;
      case Direction::Left:
      case Direction::Right:
        place_extreme(xs, id, d == Direction::Right);
        place_beside(ys, id, prev);
        break;
    }
    prev = id;
  }
  const std::size_t n = xs.size();
  PinDiagram dia{std::vector<int>(n), std::vector<int>(n), CentredPerm{}};
  for (std::size_t i = 0; i < n; ++i) {
    dia.x[xs[i]] = static_cast<int>(i);
    dia.y[ys[i]] = static_cast<int>(i);
  }
  std::vector<int> filled(n);
  for (std::size_t i = 0; i < n; ++i) filled[i] = dia.y[xs[i]] + 1;
  dia.perm = CentredPerm(std::move(filled), static_cast<std::size_t>(dia.x[0]));
  return dia;
}

CentredPerm pi_map(const PinWord& w) { return build_diagram(w).perm; }

Quadrant point_quadrant(const PinWord& w, std::size_t k) {
  if (k < 1 || k > w.length())
    throw PinError(ErrorKind::IndexOutOfRange, "point index " + std::to_string(k) + " outside 1.." + std::to_string(w.length()));
  if (k == 1) return w.quadrant;
  PinWord head{w.quadrant, {w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(k - 1)}};
  return build_diagram(head).quadrant(k);
}

std::vector<Quadrant> point_quadrants(const PinWord& w) {
  const auto dia = build_diagram(w);
  std::vector<Quadrant> q(w.length() + 1, 0);
  for (std::size_t k = 1; k <= w.length(); ++k) q[k] = dia.quadrant(k);
  return q;
}

PinWord word_factor(const PinWord& w, std::size_t i, std::size_t j) {
  if (i < 1 || j < i || j > w.length())
    throw PinError(ErrorKind::IndexOutOfRange,
                   "factor (" + std::to_string(i) + "," + std::to_string(j) + ") of a word of length " + std::to_string(w.length()));
  PinWord out;
  out.quadrant = i == 1 ? w.quadrant : point_quadrant(w, i);
  // Letter at position p ≥ 2 is letters[p-2].
  out.letters.assign(w.letters.begin() + static_cast<std::ptrdiff_t>(i - 1),
                     w.letters.begin() + static_cast<std::ptrdiff_t>(j - 1));
  return out;
}

std::pair<CentredPerm, CentredPerm> remove_interior_point(const PinWord& w, std::size_t k) {
  const std::size_t n = w.length();
  if (k < 2 || k + 1 > n)
    throw PinError(ErrorKind::NotInterior, "point " + std::to_string(k) + " is not interior to a word of length " + std::to_string(n));
  auto left = pi_map(word_factor(w, 1, k - 1));
  auto right = pi_map(word_factor(w, k + 1, n));
  const auto dia = build_diagram(w);
  const std::size_t pos = static_cast<std::size_t>(dia.x[k]);
  const auto deleted = dia.perm.without(std::span<const std::size_t>(&pos, 1));
  if (box_sum(left, right) != deleted)
    throw std::logic_error("interior point removal identity failed for " + w.to_string());
  return {std::move(left), std::move(right)};
}

CentredPerm compose_representation(std::span<const PinWord> words) {
  if (words.empty()) throw PinError(ErrorKind::EmptyInput, "a representation needs at least one word");
  std::vector<CentredPerm> parts;
  parts.reserve(words.size());
  for (const auto& w : words) parts.push_back(pi_map(w));
  return box_sum_all(parts);
}

std::vector<std::vector<PinWord>> one_point_extension_candidates(const std::vector<PinWord>& rep) {
  if (rep.empty()) throw PinError(ErrorKind::EmptyInput, "a representation needs at least one word");
  std::vector<std::vector<PinWord>> out;
  const PinWord& last = rep.back();
  for (Direction d : {Direction::Up, Direction::Down, Direction::Left, Direction::Right}) {
    if (!last.letters.empty() && is_vertical(last.letters.back()) == is_vertical(d)) continue;
    auto ext = rep;
    ext.back().letters.push_back(d);
    out.push_back(std::move(ext));
  }
  for (Quadrant q = 1; q <= 4; ++q) {
    auto ext = rep;
    ext.push_back(PinWord{q, {}});
    out.push_back(std::move(ext));
  }
  return out;
}

}  // namespace pinclass
