#include "pinclass/classify.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <tuple>
#include <unordered_map>

#include "pinclass/errors.hpp"
#include "pinclass/pimap.hpp"

namespace pinclass {

namespace {

constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

std::pair<int, int> direction_vector(Direction d) {
  switch (d) {
    case Direction::Right: return {1, 0};
    case Direction::Left: return {-1, 0};
    case Direction::Up: return {0, 1};
    case Direction::Down: return {0, -1};
  }
  return {0, 0};
}

std::pair<int, int> transform(const Symmetry& s, int x, int y) {
  if (s.swap_axes) std::swap(x, y);
  if (s.flip_x) x = -x;
  if (s.flip_y) y = -y;
  return {x, y};
}

char transform_char(const Symmetry& s, char c) {
  if (c >= '1' && c <= '4') return static_cast<char>('0' + apply(s, Quadrant(c - '0')));
  return to_char(apply(s, direction_from_char(c)));
}

std::string transform_text(const Symmetry& s, const std::string& text) {
  std::string out;
  for (char c : text) out.push_back(transform_char(s, c));
  return out;
}

std::string set_text(const std::set<PinWord>& words) {
  std::string out = "{";
  for (const auto& w : words) out += (out.size() > 1 ? "," : "") + w.to_string();
  return out + "}";
}

}  // namespace

std::string Symmetry::name() const {
  std::string n = swap_axes ? "transpose" : "id";
  if (flip_x) n += "+flipx";
  if (flip_y) n += "+flipy";
  return n;
}

const std::array<Symmetry, 8>& square_symmetries() {
  static const std::array<Symmetry, 8> all = [] {
    std::array<Symmetry, 8> a{};
    for (int i = 0; i < 8; ++i) a[i] = Symmetry{(i & 4) != 0, (i & 1) != 0, (i & 2) != 0};
    return a;
  }();
  return all;
}

Direction apply(const Symmetry& s, Direction d) {
  auto [dx, dy] = direction_vector(d);
  auto [x, y] = transform(s, dx, dy);
  if (x > 0) return Direction::Right;
  if (x < 0) return Direction::Left;
  return y > 0 ? Direction::Up : Direction::Down;
}

Quadrant apply(const Symmetry& s, Quadrant q) {
  const int sx = (q == 1 || q == 4) ? 1 : -1;
  const int sy = (q == 1 || q == 2) ? 1 : -1;
  auto [x, y] = transform(s, sx, sy);
  if (x > 0) return y > 0 ? 1 : 4;
  return y > 0 ? 2 : 3;
}

PinWord apply(const Symmetry& s, const PinWord& w) {
  PinWord out{apply(s, w.quadrant), {}};
  for (Direction d : w.letters) out.letters.push_back(apply(s, d));
  return out;
}

CentredPerm apply(const Symmetry& s, const CentredPerm& p) {
  const std::size_t n = p.size();
  std::vector<std::pair<int, int>> pts(n);
  std::size_t origin_point = p.origin();
  for (std::size_t i = 0; i < n; ++i)
    pts[i] = transform(s, static_cast<int>(i) - static_cast<int>(p.origin()), p.value(i) - p.origin_value());
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pts[a].first < pts[b].first; });
  std::vector<int> ys(n);
  std::size_t new_origin = 0;
  for (std::size_t k = 0; k < n; ++k) {
    ys[k] = pts[order[k]].second;
    if (order[k] == origin_point) new_origin = k;
  }
  return rerank(ys, new_origin);
}

bool WordPattern::matches(const std::string& word) const {
  if (word.size() < head.size() + tail.size()) return false;
  if (word.compare(0, head.size(), head) != 0) return false;
  if (word.compare(word.size() - tail.size(), tail.size(), tail) != 0) return false;
  const std::size_t mid = word.size() - head.size() - tail.size();
  if (unit.empty()) return mid == 0;
  if (mid % unit.size() != 0) return false;
  for (std::size_t i = 0; i < mid; ++i)
    if (word[head.size() + i] != unit[i % unit.size()]) return false;
  return true;
}

std::optional<std::string> WordPattern::expand(std::size_t length) const {
  const std::size_t fixed = head.size() + tail.size();
  if (length < fixed) return std::nullopt;
  const std::size_t mid = length - fixed;
  if (unit.empty() ? mid != 0 : mid % unit.size() != 0) return std::nullopt;
  std::string out = head;
  for (std::size_t i = 0; i < mid; ++i) out.push_back(unit[i % unit.size()]);
  return out + tail;
}

WordPattern WordPattern::transformed(const Symmetry& s) const {
  return {transform_text(s, head), transform_text(s, unit), transform_text(s, tail)};
}

std::string WordPattern::to_string() const {
  return unit.empty() ? head + tail : head + "(" + unit + ")^k" + tail;
}

const std::vector<DecomposableFamily>& decomposable_families() {
  static const std::vector<DecomposableFamily> families = {
      {"length 2", {"1l", "", ""}, 2, 2},
      {"length 3", {"1ld", "", ""}, 3, 3},
      {"type 1 even", {"1", "ur", "uld"}, 4, kUnbounded},
      {"type 1 odd", {"1", "ru", "ld"}, 4, kUnbounded},
      {"type 2 even", {"1l", "dl", ""}, 4, kUnbounded},
      {"type 2 odd", {"1", "ld", ""}, 4, kUnbounded},
  };
  return families;
}

const std::vector<CollisionFamily>& collision_families() {
  static const std::vector<CollisionFamily> families = {
      {"length 2", {{"1u", "", ""}, {"1r", "", ""}}, 2, 2},
      {"length 3", {{"1ul", "", ""}, {"2ru", "", ""}}, 3, 3},
      {"length 4", {{"1dlu", "", ""}, {"2rdl", "", ""}, {"3urd", "", ""}, {"4lur", "", ""}}, 4, 4},
      {"length 5 pathological", {{"1uldl", "", ""}, {"3luru", "", ""}}, 5, 5},
      {"length 5 regular", {{"1ldlu", "", ""}, {"2dlur", "", ""}}, 5, 5},
      {"even", {{"1", "ld", "r"}, {"2", "dl", "dru"}}, 6, kUnbounded},
      {"odd", {{"1", "ld", "lu"}, {"2", "dl", "ur"}}, 7, kUnbounded},
  };
  return families;
}

std::set<PinWord> table_decomposables(std::size_t length) {
  std::set<PinWord> out;
  for (const auto& fam : decomposable_families()) {
    if (length < fam.min_length || length > fam.max_length) continue;
    for (const auto& s : square_symmetries())
      if (auto w = fam.representative.transformed(s).expand(length)) out.insert(parse_pin_word(*w));
  }
  return out;
}

std::set<std::set<PinWord>> table_collision_groups(std::size_t length) {
  std::set<std::set<PinWord>> out;
  for (const auto& fam : collision_families()) {
    if (length < fam.min_length || length > fam.max_length) continue;
    for (const auto& s : square_symmetries()) {
      std::set<PinWord> group;
      for (const auto& m : fam.members) {
        auto w = m.transformed(s).expand(length);
        if (!w) break;
        group.insert(parse_pin_word(*w));
      }
      if (group.size() == fam.members.size()) out.insert(std::move(group));
    }
  }
  return out;
}

bool is_decomposable_word(const PinWord& w) {
  const std::string text = w.to_string();
  for (const auto& fam : decomposable_families()) {
    if (w.length() < fam.min_length || w.length() > fam.max_length) continue;
    for (const auto& s : square_symmetries())
      if (fam.representative.transformed(s).matches(text)) return true;
  }
  return false;
}

std::set<PinWord> collision_group(const PinWord& w) {
  for (auto& g : table_collision_groups(w.length()))
    if (g.count(w)) return g;
  return {w};
}

std::vector<PinWord> all_pin_words(std::size_t length) {
  if (length < 1) throw PinError(ErrorKind::IndexOutOfRange, "pin words have length ≥ 1");
  std::vector<PinWord> out;
  std::vector<PinWord> frontier;
  for (Quadrant q = 1; q <= 4; ++q) frontier.push_back({q, {}});
  for (std::size_t n = 1; n < length; ++n) {
    std::vector<PinWord> next;
    next.reserve(frontier.size() * 4);
    for (const auto& w : frontier)
      for (Direction d : {Direction::Down, Direction::Left, Direction::Right, Direction::Up}) {
        if (!w.letters.empty() && is_vertical(w.letters.back()) == is_vertical(d)) continue;
        PinWord e = w;
        e.letters.push_back(d);
        next.push_back(std::move(e));
      }
    frontier = std::move(next);
  }
  return frontier;
}

std::vector<ClassificationReport> verify_tables(std::size_t n_max, unsigned jobs) {
  if (n_max < 1) throw PinError(ErrorKind::IndexOutOfRange, "n_max must be ≥ 1");
  jobs = std::max(1u, std::min(jobs, 4u));
  std::vector<ClassificationReport> reports;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto words = all_pin_words(n);
    using Image = std::vector<std::tuple<std::size_t, CentredPerm, bool>>;
    // Partition by leading numeral; each slice is independent.
    auto work = [&](Quadrant first, Quadrant last) {
      Image out;
      for (std::size_t i = 0; i < words.size(); ++i) {
        if (words[i].quadrant < first || words[i].quadrant > last) continue;
        auto p = pi_map(words[i]);
        bool indec = is_box_indecomposable(p);
        out.emplace_back(i, std::move(p), indec);
      }
      return out;
    };
    std::vector<Image> parts;
    if (jobs == 1) {
      parts.push_back(work(1, 4));
    } else {
      std::vector<std::future<Image>> futs;
      const int per = static_cast<int>((4 + jobs - 1) / jobs);
      for (int q = 1; q <= 4; q += per) futs.push_back(std::async(std::launch::async, work, q, std::min(4, q + per - 1)));
      for (auto& f : futs) parts.push_back(f.get());
    }

    ClassificationReport rep;
    rep.length = n;
    rep.word_count = words.size();
    std::unordered_map<CentredPerm, std::set<PinWord>, CentredPermHash> by_image;
    for (const auto& part : parts)
      for (const auto& [i, perm, indec] : part) {
        const PinWord& w = words[i];
        if (!indec) rep.decomposable_words.insert(w);
        by_image[perm].insert(w);
      }
    for (auto& [perm, group] : by_image)
      if (group.size() > 1) rep.collision_groups.insert(group);

    const auto expected_dec = table_decomposables(n);
    const auto expected_col = table_collision_groups(n);
    for (const auto& w : rep.decomposable_words)
      if (!expected_dec.count(w)) rep.discrepancies.push_back("decomposable but not in table: " + w.to_string());
    for (const auto& w : expected_dec)
      if (!rep.decomposable_words.count(w)) rep.discrepancies.push_back("in table but indecomposable: " + w.to_string());
    for (const auto& g : rep.collision_groups)
      if (!expected_col.count(g)) rep.discrepancies.push_back("collision not in table: " + set_text(g));
    for (const auto& g : expected_col)
      if (!rep.collision_groups.count(g)) rep.discrepancies.push_back("table collision not found: " + set_text(g));
    for (const auto& g : rep.collision_groups) {
      for (const auto& w : g)
        if (rep.decomposable_words.count(w)) rep.discrepancies.push_back("word both colliding and decomposable: " + w.to_string());
      if (n >= 5) {
        std::set<char> finals;
        for (const auto& w : g) finals.insert(to_char(w.letters.back()));
        if (finals.size() != g.size()) rep.discrepancies.push_back("colliding tuple not minimal: " + set_text(g));
      }
    }
    rep.table_match = rep.discrepancies.empty();
    reports.push_back(std::move(rep));
  }
  return reports;
}

std::vector<long> overcount_series(const std::vector<std::set<PinWord>>& factors_by_length) {
  std::vector<long> out(factors_by_length.size(), 0);
  for (std::size_t n = 1; n < factors_by_length.size(); ++n) {
    const auto& present = factors_by_length[n];
    if (present.empty()) continue;
    for (const auto& g : table_collision_groups(n)) {
      long hits = 0;
      for (const auto& w : g) hits += static_cast<long>(present.count(w));
      if (hits > 1) out[n] += hits - 1;
    }
  }
  return out;
}

}  // namespace pinclass
