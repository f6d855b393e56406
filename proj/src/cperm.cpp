#include "pinclass/cperm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>
#include <tuple>

#include "pinclass/errors.hpp"

namespace pinclass {

namespace {

constexpr std::size_t kMaxSize = 255;

std::string trim_spaces(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

int parse_entry(const std::string& token, std::string_view whole) {
  if (token.empty() || token.size() > 3 ||
      !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw PinError(ErrorKind::MalformedSyntax, "bad entry '" + token + "' in '" + std::string(whole) + "'");
  return std::stoi(token);
}

}  // namespace

CentredPerm::CentredPerm(std::vector<int> filled, std::size_t origin) : origin_(origin) {
  if (filled.empty()) throw PinError(ErrorKind::NotAPermutation, "no entries");
  if (filled.size() > kMaxSize) throw PinError(ErrorKind::NotAPermutation, "too many entries");
  if (origin >= filled.size())
    throw PinError(ErrorKind::IndexOutOfRange, "origin position " + std::to_string(origin) + " out of range");
  std::vector<bool> seen(filled.size() + 1, false);
  for (int v : filled) {
    if (v < 1 || static_cast<std::size_t>(v) > filled.size() || seen[v])
      throw PinError(ErrorKind::NotAPermutation, "entries are not a permutation of 1.." + std::to_string(filled.size()));
    seen[v] = true;
  }
  filled_.assign(filled.begin(), filled.end());
}

CentredPerm CentredPerm::from_oneline(std::string_view text) {
  const std::string s = trim_spaces(text);
  if (s.empty()) throw PinError(ErrorKind::EmptyInput, "empty permutation text");
  std::vector<int> values;
  std::vector<std::size_t> origins;

  auto take = [&](std::string token) {
    bool bracketed = false;
    if (!token.empty() && token.front() == '[') {
      if (token.size() < 2 || token.back() != ']')
        throw PinError(ErrorKind::MalformedSyntax, "unbalanced bracket in '" + s + "'");
      token = token.substr(1, token.size() - 2);
      bracketed = true;
    }
    if (bracketed) origins.push_back(values.size());
    values.push_back(parse_entry(token, s));
  };

  if (s.find(',') != std::string::npos) {
    std::size_t start = 0;
    while (true) {
      std::size_t comma = s.find(',', start);
      take(s.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  } else {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '[') {
        std::size_t close = s.find(']', i);
        if (close == std::string::npos)
          throw PinError(ErrorKind::MalformedSyntax, "unbalanced bracket in '" + s + "'");
        take(s.substr(i, close - i + 1));
        i = close;
      } else {
        take(std::string(1, s[i]));
      }
    }
  }
  if (origins.empty()) throw PinError(ErrorKind::NoOrigin, "no bracketed entry in '" + s + "'");
  if (origins.size() > 1) throw PinError(ErrorKind::MultipleOrigins, "several bracketed entries in '" + s + "'");
  return CentredPerm(std::move(values), origins.front());
}

Quadrant CentredPerm::quadrant_of(std::size_t pos) const {
  if (pos >= size() || pos == origin_)
    throw PinError(ErrorKind::IndexOutOfRange, "no point at position " + std::to_string(pos));
  const bool above = filled_[pos] > filled_[origin_];
  if (pos > origin_) return above ? 1 : 4;
  return above ? 2 : 3;
}

std::vector<int> CentredPerm::strip_origin() const {
  std::vector<int> out;
  out.reserve(length());
  const int ov = origin_value();
  for (std::size_t i = 0; i < size(); ++i)
    if (i != origin_) out.push_back(filled_[i] > ov ? filled_[i] - 1 : filled_[i]);
  return out;
}

CentredPerm CentredPerm::without(std::span<const std::size_t> positions) const {
  std::vector<bool> drop(size(), false);
  for (std::size_t p : positions) {
    if (p >= size() || p == origin_)
      throw PinError(ErrorKind::IndexOutOfRange, "cannot delete position " + std::to_string(p));
    drop[p] = true;
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < size(); ++i)
    if (!drop[i]) keep.push_back(i);
  return restricted_to(keep);
}

CentredPerm CentredPerm::restricted_to(std::span<const std::size_t> positions) const {
  std::vector<std::size_t> pos(positions.begin(), positions.end());
  std::sort(pos.begin(), pos.end());
  pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
  std::vector<int> vals;
  std::size_t new_origin = size();
  for (std::size_t p : pos) {
    if (p >= size()) throw PinError(ErrorKind::IndexOutOfRange, "position " + std::to_string(p));
    if (p == origin_) new_origin = vals.size();
    vals.push_back(filled_[p]);
  }
  if (new_origin == size()) throw PinError(ErrorKind::NoOrigin, "restriction drops the origin");
  return rerank(vals, new_origin);
}

std::string CentredPerm::to_string() const {
  const bool commas = size() >= 10;
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (commas && i > 0) out.push_back(',');
    std::string v = std::to_string(filled_[i]);
    out += i == origin_ ? "[" + v + "]" : v;
  }
  return out;
}

std::size_t CentredPerm::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : filled_) h = (h ^ v) * 1099511628211ull;
  return (h ^ origin_) * 1099511628211ull;
}

CentredPerm rerank(std::span<const int> values, std::size_t origin) {
  if (values.empty() || values.size() > kMaxSize) throw PinError(ErrorKind::NotAPermutation, "bad size");
  if (origin >= values.size()) throw PinError(ErrorKind::IndexOutOfRange, "origin out of range");
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<std::uint8_t> ranks(values.size());
  for (std::size_t r = 0; r < idx.size(); ++r) {
    if (r > 0 && values[idx[r]] == values[idx[r - 1]])
      throw PinError(ErrorKind::NotAPermutation, "repeated value");
    ranks[idx[r]] = static_cast<std::uint8_t>(r + 1);
  }
  return CentredPerm(CentredPerm::Unchecked{}, std::move(ranks), origin);
}

CentredPerm single_point(Quadrant q) {
  switch (q) {
    case 1: return CentredPerm({1, 2}, 0);
    case 2: return CentredPerm({2, 1}, 1);
    case 3: return CentredPerm({1, 2}, 1);
    case 4: return CentredPerm({2, 1}, 0);
  }
  throw PinError(ErrorKind::IndexOutOfRange, "quadrant must be 1..4");
}

std::size_t QuadrantProfile::occupied_count() const {
  return static_cast<std::size_t>(std::count_if(counts.begin(), counts.end(), [](std::size_t c) { return c > 0; }));
}

QuadrantProfile quadrant_profile(const CentredPerm& p) {
  QuadrantProfile prof;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (i != p.origin()) ++prof.counts[p.quadrant_of(i) - 1];
  return prof;
}

std::optional<Quadrant> one_quadrant(const CentredPerm& p) {
  const auto prof = quadrant_profile(p);
  if (prof.occupied_count() != 1) return std::nullopt;
  for (Quadrant q = 1; q <= 4; ++q)
    if (prof.occupied(q)) return q;
  return std::nullopt;
}

bool adjacency_condition(const QuadrantProfile& profile) {
  if (profile.occupied_count() == 1) return true;
  for (Quadrant q = 1; q <= 4; ++q)
    if (profile.occupied(q) && profile.occupied(q % 4 + 1)) return true;
  return false;
}

namespace {

struct Embedder {
  const CentredPerm& big;
  const CentredPerm& small;
  std::vector<std::size_t> chosen;

  bool consistent(std::size_t j, std::size_t pos) const {
    const int bv = big.value(pos);
    const int sv = small.value(j);
    for (std::size_t k = 0; k < j; ++k)
      if ((big.value(chosen[k]) < bv) != (small.value(k) < sv)) return false;
    return true;
  }

  bool search(std::size_t j, std::size_t next_pos) {
    const std::size_t m = small.size();
    if (j == m) return true;
    if (j == small.origin()) {
      if (next_pos > big.origin() || !consistent(j, big.origin())) return false;
      chosen[j] = big.origin();
      return search(j + 1, big.origin() + 1);
    }
    // Entries before the origin must land before big's origin.
    std::size_t last = j < small.origin() ? big.origin() - (small.origin() - j) : big.size() - (m - j);
    for (std::size_t pos = next_pos; pos <= last && pos < big.size(); ++pos) {
      if (pos == big.origin()) continue;
      if (!consistent(j, pos)) continue;
      chosen[j] = pos;
      if (search(j + 1, pos + 1)) return true;
    }
    return false;
  }
};

}  // namespace

bool contains(const CentredPerm& big, const CentredPerm& small) {
  if (small.size() > big.size()) return false;
  if (small.origin() > big.origin()) return false;
  if (small.size() - small.origin() > big.size() - big.origin()) return false;
  Embedder e{big, small, std::vector<std::size_t>(small.size())};
  return e.search(0, 0);
}

CentredPerm box_sum(const CentredPerm& inner, const CentredPerm& outer) {
  const std::size_t a = inner.size();
  const int v = outer.origin_value();
  const int shift = static_cast<int>(a) - 1;
  std::vector<std::uint8_t> out;
  out.reserve(a + outer.size() - 1);
  auto outer_value = [&](std::size_t p) {
    int x = outer.value(p);
    return static_cast<std::uint8_t>(x > v ? x + shift : x);
  };
  for (std::size_t p = 0; p < outer.origin(); ++p) out.push_back(outer_value(p));
  for (std::size_t p = 0; p < a; ++p) out.push_back(static_cast<std::uint8_t>(inner.value(p) + v - 1));
  for (std::size_t p = outer.origin() + 1; p < outer.size(); ++p) out.push_back(outer_value(p));
  if (out.size() > kMaxSize) throw PinError(ErrorKind::NotAPermutation, "box sum too long");
  return CentredPerm(CentredPerm::Unchecked{}, std::move(out), outer.origin() + inner.origin());
}

CentredPerm box_sum_all(std::span<const CentredPerm> parts) {
  if (parts.empty()) return CentredPerm{};
  CentredPerm acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) acc = box_sum(parts[i], acc);
  return acc;
}

std::vector<CentredInterval> centred_intervals(const CentredPerm& p) {
  std::vector<CentredInterval> out;
  const std::size_t o = p.origin();
  for (std::size_t lo = 0; lo <= o; ++lo) {
    int mn = p.origin_value(), mx = mn;
    for (std::size_t k = lo; k < o; ++k) {
      mn = std::min(mn, p.value(k));
      mx = std::max(mx, p.value(k));
    }
    for (std::size_t hi = o; hi < p.size(); ++hi) {
      mn = std::min(mn, p.value(hi));
      mx = std::max(mx, p.value(hi));
      if (static_cast<std::size_t>(mx - mn) == hi - lo) out.push_back({lo, hi, mn, mx});
    }
  }
  return out;
}

std::vector<CentredInterval> minimal_centred_intervals(const CentredPerm& p) {
  if (p.length() == 0) throw PinError(ErrorKind::EmptyPermutation, "the empty centred permutation has no non-trivial interval");
  std::vector<CentredInterval> nontrivial;
  for (const auto& iv : centred_intervals(p))
    if (iv.point_count() > 0) nontrivial.push_back(iv);
  std::vector<CentredInterval> minimal;
  for (const auto& a : nontrivial) {
    bool has_smaller = std::any_of(nontrivial.begin(), nontrivial.end(), [&](const CentredInterval& b) {
      return !(a == b) && a.x_lo <= b.x_lo && b.x_hi <= a.x_hi;
    });
    if (!has_smaller) minimal.push_back(a);
  }
  return minimal;
}

std::pair<CentredPerm, CentredPerm> split_at(const CentredPerm& p, const CentredInterval& iv) {
  if (iv.x_lo > p.origin() || iv.x_hi < p.origin() || iv.x_hi >= p.size())
    throw PinError(ErrorKind::IndexOutOfRange, "interval does not contain the origin");
  std::vector<std::size_t> inside, outside;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i >= iv.x_lo && i <= iv.x_hi) inside.push_back(i);
    if (i < iv.x_lo || i > iv.x_hi || i == p.origin()) outside.push_back(i);
  }
  return {p.restricted_to(inside), p.restricted_to(outside)};
}

bool is_box_indecomposable(const CentredPerm& p) {
  if (p.length() == 0) throw PinError(ErrorKind::EmptyPermutation, "indecomposability needs a point");
  for (const auto& iv : centred_intervals(p))
    if (iv.point_count() > 0 && iv.point_count() < p.length()) return false;
  return true;
}

std::vector<CentredPerm> box_decompose(const CentredPerm& p) {
  std::vector<CentredPerm> parts;
  CentredPerm rest = p;
  while (rest.length() > 0) {
    auto mins = minimal_centred_intervals(rest);
    const CentredInterval* pick = &mins.front();
    if (mins.size() == 2) {
      auto quad = [&](const CentredInterval& iv) {
        std::size_t pos = iv.x_lo == rest.origin() ? iv.x_hi : iv.x_lo;
        return rest.quadrant_of(pos);
      };
      if (quad(mins[1]) < quad(mins[0])) pick = &mins[1];
    }
    auto [inner, outer] = split_at(rest, *pick);
    parts.push_back(std::move(inner));
    rest = std::move(outer);
  }
  return parts;
}

bool commutes(const CentredPerm& a, const CentredPerm& b) {
  if (a == b) return true;
  auto qa = one_quadrant(a);
  auto qb = one_quadrant(b);
  return qa && qb && (*qa + 2 - 1) % 4 + 1 == *qb;
}

std::vector<CentredPerm> normal_form(std::span<const CentredPerm> decomposition) {
  struct Item {
    CentredPerm perm;
    Quadrant quadrant;
    std::string text;
  };
  std::vector<Item> rest;
  for (const auto& p : decomposition) {
    if (p.length() == 0 || !is_box_indecomposable(p))
      throw PinError(ErrorKind::NonIndecomposableElement, p.to_string() + " is not box-indecomposable");
    const auto prof = quadrant_profile(p);
    Quadrant q = 1;
    while (!prof.occupied(q)) ++q;
    rest.push_back({p, q, p.to_string()});
  }
  auto key = [](const Item& it) { return std::tuple(it.quadrant, it.perm.length(), std::string_view(it.text)); };

  std::vector<CentredPerm> out;
  while (!rest.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < rest.size(); ++i) {
      bool movable = true;
      for (std::size_t k = 0; k < i && movable; ++k) movable = commutes(rest[k].perm, rest[i].perm);
      if (!movable) continue;
      if (key(rest[i]) < key(rest[best])) best = i;
    }
    out.push_back(rest[best].perm);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

}  // namespace pinclass
