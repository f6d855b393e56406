#include "pinclass/oracle.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <unordered_set>

#include "pinclass/classify.hpp"
#include "pinclass/errors.hpp"
#include "pinclass/pimap.hpp"
#include "pinclass/pipeline.hpp"

namespace pinclass {

namespace {

using PermSet = std::unordered_set<CentredPerm, CentredPermHash>;

// Packed pattern: 4 bits per entry (value - 1) in x-order, origin index in the
// top nibble. Holds up to 15 entries.
using Key = std::uint64_t;

Key encode(const CentredPerm& p) {
  Key k = static_cast<Key>(p.origin()) << 60;
  for (std::size_t i = 0; i < p.size(); ++i) k |= static_cast<Key>(p.value(i) - 1) << (4 * i);
  return k;
}

CentredPerm decode(Key k, std::size_t size) {
  std::vector<int> vals(size);
  for (std::size_t i = 0; i < size; ++i) vals[i] = static_cast<int>((k >> (4 * i)) & 0xF) + 1;
  return CentredPerm(std::move(vals), static_cast<std::size_t>(k >> 60));
}

struct Mask128 {
  std::uint64_t lo = 0, hi = 0;
  void set(int v) { (v < 64 ? lo : hi) |= std::uint64_t{1} << (v & 63); }
  void clear(int v) { (v < 64 ? lo : hi) &= ~(std::uint64_t{1} << (v & 63)); }
  // Number of set bits strictly below v.
  int below(int v) const {
    if (v < 64) return __builtin_popcountll(lo & ((std::uint64_t{1} << v) - 1));
    return __builtin_popcountll(lo) + __builtin_popcountll(hi & ((std::uint64_t{1} << (v - 64)) - 1));
  }
};

// All origin-pinned patterns with exactly k points of a centred permutation.
struct PatternScan {
  const CentredPerm& big;
  std::size_t k;
  std::vector<std::size_t> others;
  std::vector<std::size_t> chosen;
  Mask128 mask;
  std::unordered_set<Key>& out;

  void run() {
    for (std::size_t i = 0; i < big.size(); ++i)
      if (i != big.origin()) others.push_back(i);
    chosen.resize(k);
    mask.set(big.origin_value() - 1);
    dfs(0, 0);
  }

  void dfs(std::size_t depth, std::size_t start) {
    if (depth == k) {
      emit();
      return;
    }
    for (std::size_t i = start; i + (k - depth) <= others.size(); ++i) {
      chosen[depth] = others[i];
      const int v = big.value(others[i]) - 1;
      mask.set(v);
      dfs(depth + 1, i + 1);
      mask.clear(v);
    }
  }

  void emit() {
    Key key = 0;
    std::size_t slot = 0;
    bool placed = false;
    auto put = [&](std::size_t pos) {
      key |= static_cast<Key>(mask.below(big.value(pos) - 1)) << (4 * slot);
      ++slot;
    };
    for (std::size_t j = 0; j < k; ++j) {
      if (!placed && chosen[j] > big.origin()) {
        key |= static_cast<Key>(slot) << 60;
        put(big.origin());
        placed = true;
      }
      put(chosen[j]);
    }
    if (!placed) {
      key |= static_cast<Key>(slot) << 60;
      put(big.origin());
    }
    out.insert(key);
  }
};

void guard_size(std::size_t total, const std::string& what) {
  if (total > kCensusLimit)
    throw PinError(ErrorKind::CensusTooLarge, what + " exceeds " + std::to_string(kCensusLimit) + " retained permutations");
}

std::vector<std::vector<CentredPerm>> sorted_levels(const std::vector<PermSet>& levels) {
  std::vector<std::vector<CentredPerm>> out;
  for (const auto& s : levels) {
    std::vector<CentredPerm> v(s.begin(), s.end());
    std::sort(v.begin(), v.end());
    out.push_back(std::move(v));
  }
  return out;
}

// Level sets S_n = ∪_k img_k ⊞ S_{n-k}, with S_0 = {empty}.
ClassCensus compose_levels(const std::vector<std::vector<CentredPerm>>& img, std::size_t n_max, const CensusOptions& opt,
                           std::string description, CensusMethod method) {
  std::vector<PermSet> levels(n_max + 1);
  levels[0].insert(CentredPerm{});
  std::size_t total = 1;
  const unsigned jobs = std::max(1u, opt.jobs);
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<std::pair<const CentredPerm*, std::size_t>> firsts;
    for (std::size_t k = 1; k <= n && k < img.size(); ++k)
      for (const auto& a : img[k]) firsts.emplace_back(&a, n - k);
    auto work = [&](std::size_t from, std::size_t to) {
      PermSet local;
      for (std::size_t i = from; i < to; ++i)
        for (const auto& b : levels[firsts[i].second]) local.insert(box_sum(*firsts[i].first, b));
      return local;
    };
    if (jobs == 1 || firsts.size() < 2) {
      levels[n] = work(0, firsts.size());
    } else {
      std::vector<std::future<PermSet>> futs;
      const std::size_t chunk = (firsts.size() + jobs - 1) / jobs;
      for (std::size_t from = 0; from < firsts.size(); from += chunk)
        futs.push_back(std::async(std::launch::async, work, from, std::min(firsts.size(), from + chunk)));
      for (auto& f : futs) {
        auto part = f.get();
        levels[n].insert(part.begin(), part.end());
      }
    }
    total += levels[n].size();
    guard_size(total, description);
  }
  ClassCensus c;
  c.description = std::move(description);
  c.method = method;
  c.n_max = n_max;
  for (const auto& s : levels) c.counts.push_back(static_cast<long>(s.size()));
  if (opt.retain) c.perms = sorted_levels(levels);
  return c;
}

std::vector<CentredPerm> distinct_images(const std::vector<PinWord>& words) {
  std::set<CentredPerm> s;
  for (const auto& w : words) s.insert(pi_map(w));
  return {s.begin(), s.end()};
}

}  // namespace

std::string_view method_name(CensusMethod m) {
  switch (m) {
    case CensusMethod::Subset: return "subset";
    case CensusMethod::Composition: return "composition";
    case CensusMethod::Representation: return "representation";
    case CensusMethod::Generators: return "generators";
  }
  return "?";
}

ClassCensus enumerate_class_subset(const PinSpec& spec, std::size_t n_max, const CensusOptions& opt) {
  if (n_max > opt.subset_guard)
    throw PinError(ErrorKind::CensusTooLarge, "subset census beyond length " + std::to_string(opt.subset_guard) + " needs an explicit override");
  if (n_max > 14) throw PinError(ErrorKind::CensusTooLarge, "subset census supports lengths up to 14");
  const std::size_t step = spec.period();
  const std::size_t start = (n_max + 1) * (spec.prefix_length() + spec.period()) + n_max;
  const std::size_t cap = std::min<std::size_t>(start + 10 * step, 126);

  auto census_at = [&](std::size_t depth) {
    const CentredPerm big = pi_map(spec.initial(depth));
    std::vector<std::unordered_set<Key>> levels(n_max + 1);
    PatternScan scan{big, n_max, {}, {}, {}, levels[n_max]};
    scan.run();
    for (std::size_t n = n_max; n > 0; --n) {
      for (Key key : levels[n]) {
        const CentredPerm p = decode(key, n + 1);
        for (std::size_t i = 0; i < p.size(); ++i) {
          if (i == p.origin()) continue;
          levels[n - 1].insert(encode(p.without(std::span<const std::size_t>(&i, 1))));
        }
      }
    }
    return levels;
  };

  std::size_t depth = std::min(start, cap);
  auto prev = census_at(depth);
  bool stable = false;
  std::vector<std::unordered_set<Key>> cur;
  while (depth + step <= cap) {
    depth += step;
    cur = census_at(depth);
    bool same = true;
    for (std::size_t n = 0; n <= n_max && same; ++n) same = cur[n].size() == prev[n].size();
    prev = std::move(cur);
    if (same) {
      stable = true;
      break;
    }
  }
  if (!stable)
    throw PinError(ErrorKind::ConvergenceNotReached, "subset census of " + spec.to_string() + " did not stabilise by depth " + std::to_string(cap));

  ClassCensus c;
  c.description = spec.to_string();
  c.method = CensusMethod::Subset;
  c.n_max = n_max;
  c.depth = depth;
  c.stable = stable;
  std::size_t total = 0;
  for (const auto& s : prev) {
    c.counts.push_back(static_cast<long>(s.size()));
    total += s.size();
  }
  guard_size(total, c.description);
  if (opt.retain) {
    for (std::size_t n = 0; n <= n_max; ++n) {
      std::vector<CentredPerm> v;
      for (Key k : prev[n]) v.push_back(decode(k, n + 1));
      std::sort(v.begin(), v.end());
      c.perms.push_back(std::move(v));
    }
  }
  return c;
}

ClassCensus enumerate_class_composition(const PinSpec& spec, std::size_t n_max, const CensusOptions& opt) {
  if (!is_recurrent(spec))
    throw PinError(ErrorKind::NotRecurrent, spec.to_string() + " is not recurrent; the composition census needs a recurrent sequence");
  if (n_max > 10) throw PinError(ErrorKind::CensusTooLarge, "composition census supports lengths up to 10");
  std::vector<std::vector<CentredPerm>> img(n_max + 1);
  for (std::size_t k = 1; k <= n_max; ++k) {
    const auto f = enumerate_pin_factors(spec, k, FactorMode::All);
    img[k] = distinct_images({f.begin(), f.end()});
  }
  return compose_levels(img, n_max, opt, spec.to_string(), CensusMethod::Composition);
}

ClassCensus enumerate_pin_permutations(std::size_t n_max, const CensusOptions& opt) {
  if (n_max > 8) throw PinError(ErrorKind::CensusTooLarge, "the complete pin class census supports lengths up to 8");
  std::vector<std::vector<CentredPerm>> img(n_max + 1);
  for (std::size_t k = 1; k <= n_max; ++k) img[k] = distinct_images(all_pin_words(k));
  return compose_levels(img, n_max, opt, "complete pin class", CensusMethod::Representation);
}

ClassCensus enumerate_generated_closure(const std::vector<CentredPerm>& generators, std::size_t n_max, const CensusOptions& opt) {
  if (generators.empty()) throw PinError(ErrorKind::EmptyInput, "no generators");
  std::vector<std::vector<CentredPerm>> img(n_max + 1);
  std::string description = "closure of {";
  for (std::size_t i = 0; i < generators.size(); ++i) description += (i ? "," : "") + generators[i].to_string();
  description += "}";
  for (const auto& p : downward_closure(generators))
    if (p.length() > 0 && p.length() <= n_max && is_box_indecomposable(p)) img[p.length()].push_back(p);
  return compose_levels(img, n_max, opt, std::move(description), CensusMethod::Generators);
}

PropertyReport property_suite(const ClassCensus& census, bool closed, bool adjacency) {
  PropertyReport r;
  const auto& C = census.counts;
  const std::size_t N = C.size() - 1;
  auto at = [&](std::size_t i) { return static_cast<__int128>(C[i]); };
  for (std::size_t n = 1; n <= N; ++n) {
    ++r.checks;
    if (at(n) > 12 * at(n - 1))
      r.violations.push_back("C_" + std::to_string(n) + " > 12 C_" + std::to_string(n - 1));
  }
  if (closed && adjacency) {
    r.supermultiplicative_checked = true;
    for (std::size_t m = 1; m <= N; ++m)
      for (std::size_t n = 1; m + n <= N; ++n) {
        r.checks += 2;
        if (at(m + n) < at(m - 1) * at(n - 1))
          r.violations.push_back("C_" + std::to_string(m + n) + " < C_" + std::to_string(m - 1) + " C_" + std::to_string(n - 1));
        if (144 * at(m + n) < at(m) * at(n))
          r.violations.push_back("144 C_" + std::to_string(m + n) + " < C_" + std::to_string(m) + " C_" + std::to_string(n));
      }
  }
  return r;
}

UncentredReport centred_uncentred_check(const ClassCensus& census) {
  if (!census.retains_perms()) throw PinError(ErrorKind::EmptyInput, "the uncentred check needs retained permutations");
  UncentredReport r;
  for (std::size_t n = 0; n < census.perms.size(); ++n) {
    std::set<std::vector<int>> under;
    for (const auto& p : census.perms[n]) under.insert(p.strip_origin());
    const long u = static_cast<long>(under.size());
    r.uncentred.push_back(u);
    const long c = census.counts[n];
    const long sq = static_cast<long>((n + 1) * (n + 1));
    if (u > c || c > sq * u)
      r.violations.push_back("length " + std::to_string(n) + ": C=" + std::to_string(u) + ", C°=" + std::to_string(c));
  }
  return r;
}

}  // namespace pinclass
