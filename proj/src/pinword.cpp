#include "pinclass/pinword.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

#include "pinclass/errors.hpp"
#include "pinclass/pimap.hpp"

namespace pinclass {

namespace {

std::string normalise(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

std::vector<Direction> parse_letters(std::string_view s) {
  std::vector<Direction> out;
  out.reserve(s.size());
  for (char c : s) out.push_back(direction_from_char(c));
  return out;
}

std::string letters_text(std::span<const Direction> letters) {
  std::string s;
  for (Direction d : letters) s.push_back(to_char(d));
  return s;
}

bool alternates(Direction a, Direction b) { return is_vertical(a) != is_vertical(b); }

std::vector<Direction> minimal_period(const std::vector<Direction>& cycle) {
  const std::size_t c = cycle.size();
  for (std::size_t d = 1; d < c; ++d) {
    if (c % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < c && ok; ++i) ok = cycle[i] == cycle[i - d];
    if (ok) return {cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(d)};
  }
  return cycle;
}

// Factors from precomputed point quadrants of a long enough initial segment.
PinWord factor_from(const PinSpec& spec, const std::vector<Quadrant>& quads, std::size_t i, std::size_t j) {
  PinWord out;
  out.quadrant = i == 1 ? spec.prefix().quadrant : quads[i];
  for (std::size_t p = i + 1; p <= j; ++p) out.letters.push_back(spec.letter(p));
  return out;
}

}  // namespace

Direction direction_from_char(char c) {
  switch (std::tolower(static_cast<unsigned char>(c))) {
    case 'u': return Direction::Up;
    case 'd': return Direction::Down;
    case 'l': return Direction::Left;
    case 'r': return Direction::Right;
  }
  throw PinError(ErrorKind::MalformedSyntax, std::string("'") + c + "' is not a direction letter");
}

std::string PinWord::to_string() const { return std::to_string(quadrant) + letters_text(letters); }

void check_alternation(std::span<const Direction> letters, std::string_view context) {
  for (std::size_t i = 1; i < letters.size(); ++i)
    if (!alternates(letters[i - 1], letters[i]))
      throw PinError(ErrorKind::AlignmentViolation, "letters " + std::to_string(i) + " and " + std::to_string(i + 1) +
                                                        " share an alignment in '" + std::string(context) + "'");
}

PinWord parse_pin_word(std::string_view text) {
  const std::string s = normalise(text);
  if (s.empty()) throw PinError(ErrorKind::EmptyInput, "empty pin word");
  if (s[0] < '1' || s[0] > '4') throw PinError(ErrorKind::MalformedSyntax, "pin word must start with a numeral 1-4: '" + s + "'");
  PinWord w{s[0] - '0', parse_letters(std::string_view(s).substr(1))};
  check_alternation(w.letters, s);
  return w;
}

PinSpec::PinSpec(PinWord prefix, std::vector<Direction> cycle) : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
  if (prefix_.quadrant < 1 || prefix_.quadrant > 4) throw PinError(ErrorKind::MalformedSyntax, "quadrant numeral must be 1..4");
  if (cycle_.empty()) throw PinError(ErrorKind::MalformedSyntax, "a pin sequence needs a non-empty cycle");
  check_alternation(prefix_.letters, prefix_.to_string());
  const std::string text = to_string();
  for (std::size_t i = 0; i < cycle_.size(); ++i)
    if (!alternates(cycle_[i], cycle_[(i + 1) % cycle_.size()]))
      throw PinError(ErrorKind::NonAlternatingCycle, "cycle does not alternate through its wrap-around in '" + text + "'");
  if (!prefix_.letters.empty() && !alternates(prefix_.letters.back(), cycle_.front()))
    throw PinError(ErrorKind::NonAlternatingCycle, "prefix and cycle do not alternate at the junction in '" + text + "'");
}

Direction PinSpec::letter(std::size_t position) const {
  if (position < 2) throw PinError(ErrorKind::IndexOutOfRange, "position 1 holds the numeral");
  const std::size_t idx = position - 2;
  if (idx < prefix_.letters.size()) return prefix_.letters[idx];
  return cycle_[(idx - prefix_.letters.size()) % cycle_.size()];
}

PinWord PinSpec::initial(std::size_t n) const {
  if (n < 1) throw PinError(ErrorKind::IndexOutOfRange, "initial segment needs length ≥ 1");
  PinWord w{prefix_.quadrant, {}};
  w.letters.reserve(n - 1);
  for (std::size_t p = 2; p <= n; ++p) w.letters.push_back(letter(p));
  return w;
}

PinSpec PinSpec::canonical() const {
  PinWord pre = prefix_;
  std::vector<Direction> cyc = minimal_period(cycle_);
  while (!pre.letters.empty() && pre.letters.back() == cyc.back()) {
    pre.letters.pop_back();
    std::rotate(cyc.rbegin(), cyc.rbegin() + 1, cyc.rend());
  }
  return PinSpec(std::move(pre), std::move(cyc));
}

std::string PinSpec::cycle_key() const {
  const std::string base = letters_text(minimal_period(cycle_));
  std::string best = base;
  for (std::size_t r = 1; r < base.size(); ++r) best = std::min(best, base.substr(r) + base.substr(0, r));
  return best;
}

std::string PinSpec::to_string() const { return prefix_.to_string() + "(" + letters_text(cycle_) + ")*"; }

bool operator==(const PinSpec& a, const PinSpec& b) {
  const PinSpec ca = a.canonical(), cb = b.canonical();
  return ca.prefix_ == cb.prefix_ && ca.cycle_ == cb.cycle_;
}

PinSpec parse_pin_spec(std::string_view text) {
  const std::string s = normalise(text);
  if (s.empty()) throw PinError(ErrorKind::EmptyInput, "empty pin sequence");
  static const std::regex shape(R"(([1-4])([udlr]*)\(([udlr]+)\)\*)");
  std::smatch m;
  if (!std::regex_match(s, m, shape)) {
    if (s.find('(') == std::string::npos) {
      parse_pin_word(s);
      throw PinError(ErrorKind::MalformedSyntax, "'" + s + "' is a finite word; a sequence needs a cycle such as 1(ru)*");
    }
    throw PinError(ErrorKind::MalformedSyntax, "'" + s + "' does not match prefix(cycle)*");
  }
  PinWord prefix{m[1].str()[0] - '0', parse_letters(m[2].str())};
  check_alternation(prefix.letters, s);
  return PinSpec(std::move(prefix), parse_letters(m[3].str()));
}

PinWord pin_factor(const PinSpec& spec, std::size_t i, std::size_t j) {
  if (i < 1 || j < i)
    throw PinError(ErrorKind::IndexOutOfRange, "pin factor needs 1 ≤ i ≤ j, got (" + std::to_string(i) + "," + std::to_string(j) + ")");
  return word_factor(spec.initial(j), i, j);
}

PinSpec left_truncate(const PinSpec& spec, std::size_t n) {
  if (n < 1) throw PinError(ErrorKind::IndexOutOfRange, "truncation index must be ≥ 1");
  if (n == 1) return spec;
  PinWord head{point_quadrant(spec.initial(n), n), {}};
  const std::size_t plen = spec.prefix().letters.size();
  // Letters after position n start at stream index n-1.
  std::vector<Direction> cyc = spec.cycle();
  if (n - 1 <= plen) {
    head.letters.assign(spec.prefix().letters.begin() + static_cast<std::ptrdiff_t>(n - 1), spec.prefix().letters.end());
  } else {
    std::rotate(cyc.begin(), cyc.begin() + static_cast<std::ptrdiff_t>((n - 1 - plen) % cyc.size()), cyc.end());
  }
  return PinSpec(std::move(head), std::move(cyc));
}

std::set<PinWord> enumerate_pin_factors(const PinSpec& spec, std::size_t n, FactorMode mode) {
  if (n < 1) throw PinError(ErrorKind::IndexOutOfRange, "factor length must be ≥ 1");
  const std::size_t p = spec.prefix_length(), c = spec.period();
  const std::size_t first = mode == FactorMode::All ? 1 : p + 2;
  const std::size_t last = p + c + 1;
  const auto quads = point_quadrants(spec.initial(last + n - 1));
  std::set<PinWord> out;
  for (std::size_t i = first; i <= last; ++i) out.insert(factor_from(spec, quads, i, i + n - 1));
  return out;
}

std::size_t stabilization_window(const PinSpec& spec) { return spec.prefix_length() + 2 * spec.period() + 2; }

std::vector<std::size_t> factor_counts(const PinSpec& spec, std::size_t up_to, FactorMode mode) {
  std::vector<std::size_t> counts(up_to + 1, 0);
  for (std::size_t n = 1; n <= up_to; ++n) counts[n] = enumerate_pin_factors(spec, n, mode).size();
  return counts;
}

bool is_recurrent(const PinSpec& spec) {
  const std::size_t window = stabilization_window(spec);
  for (std::size_t n = 1; n <= window; ++n)
    if (enumerate_pin_factors(spec, n, FactorMode::All) != enumerate_pin_factors(spec, n, FactorMode::Recurrent)) return false;
  return true;
}

}  // namespace pinclass
