#pragma once

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "pinclass/pimap.hpp"
#include "pinclass/pinword.hpp"
#include "pinclass/series.hpp"

namespace testing_support {

using namespace pinclass;

inline RatGF gf(const std::string& num, const std::string& den) { return RatGF(parse_poly(num), parse_poly(den)); }

inline std::vector<long> long_coeffs(const RatGF& f, std::size_t n) {
  std::vector<long> out;
  for (const auto& c : coeffs(f, n)) {
    if (c.get_den() != 1) throw std::runtime_error("non-integer coefficient");
    out.push_back(c.get_num().get_si());
  }
  return out;
}

/// Uniformly random pin word of the given length.
inline PinWord random_word(std::mt19937& rng, std::size_t length) {
  PinWord w;
  w.quadrant = std::uniform_int_distribution<int>(1, 4)(rng);
  std::bernoulli_distribution coin;
  bool vertical = coin(rng);
  for (std::size_t i = 1; i < length; ++i) {
    const bool pos = coin(rng);
    w.letters.push_back(vertical ? (pos ? Direction::Up : Direction::Down) : (pos ? Direction::Right : Direction::Left));
    vertical = !vertical;
  }
  return w;
}

inline CentredPerm random_perm(std::mt19937& rng, std::size_t length) {
  std::vector<int> v(length + 1);
  for (std::size_t i = 0; i <= length; ++i) v[i] = static_cast<int>(i) + 1;
  std::shuffle(v.begin(), v.end(), rng);
  const std::size_t origin = std::uniform_int_distribution<std::size_t>(0, length)(rng);
  return CentredPerm(v, origin);
}

}  // namespace testing_support
