// Copyright 2026 The signposet Authors
// SPDX-License-Identifier: Apache-2.0
//
// Brute-force reference computations that share no code with the library:
// sign vectors are plain int vectors, the order is the raw entrywise rule,
// counts come from exhaustive enumeration.

#ifndef SIGNPOSET_TESTS_ORACLES_HPP
#define SIGNPOSET_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

using Vec = std::vector<int>;  // entries in {-1, 0, 1}

inline int changes(const Vec& v) {
  int last = 0, count = 0;
  for (int e : v) {
    if (e == 0) continue;
    if (last != 0 && e != last) ++count;
    last = e;
  }
  return count;
}

inline int support(const Vec& v) {
  return static_cast<int>(std::count_if(v.begin(), v.end(), [](int e) { return e != 0; }));
}

inline std::string str(const Vec& v) {
  std::string s;
  for (int e : v) s += e > 0 ? '+' : e < 0 ? '-' : '0';
  return s;
}

/// All nonzero vectors of length n whose first nonzero entry is +.
inline std::vector<Vec> canonical_vectors(int n) {
  std::vector<Vec> out;
  Vec v(static_cast<std::size_t>(n), -1);
  while (true) {
    auto first = std::find_if(v.begin(), v.end(), [](int e) { return e != 0; });
    if (first != v.end() && *first == 1) out.push_back(v);
    int i = n - 1;
    while (i >= 0 && v[static_cast<std::size_t>(i)] == 1) v[static_cast<std::size_t>(i--)] = -1;
    if (i < 0) break;
    ++v[static_cast<std::size_t>(i)];
  }
  return out;
}

inline bool leq_signed(const Vec& v, const Vec& w) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0 && v[i] != w[i]) return false;
  }
  return true;
}

/// v <= w for projective classes: one of ±v sits entrywise under w.
inline bool leq(const Vec& v, const Vec& w) {
  Vec neg(v);
  for (int& e : neg) e = -e;
  return leq_signed(v, w) || leq_signed(neg, w);
}

/// A finite poset given by its full order matrix.
struct Poset {
  std::vector<Vec> elements;
  std::vector<int> rank;
  std::vector<std::vector<bool>> le;  // le[i][j]: i <= j

  std::size_t size() const { return elements.size(); }
  bool less(std::size_t i, std::size_t j) const { return i != j && le[i][j]; }

  bool covers(std::size_t i, std::size_t j) const {
    if (!less(i, j)) return false;
    for (std::size_t k = 0; k < size(); ++k) {
      if (less(i, k) && less(k, j)) return false;
    }
    return true;
  }

  std::size_t strict_pairs() const {
    std::size_t count = 0;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) count += less(i, j);
    return count;
  }
};

/// exact = true: R_{n,l}, rank = support - l. exact = false: P_{n,l}, rank = support.
inline Poset sign_poset(int n, int l, bool exact) {
  Poset p;
  for (const Vec& v : canonical_vectors(n)) {
    const int c = changes(v);
    if (exact ? c == l : c <= l) {
      p.elements.push_back(v);
      p.rank.push_back(exact ? support(v) - l : support(v));
    }
  }
  const std::size_t size = p.elements.size();
  p.le.assign(size, std::vector<bool>(size, false));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) p.le[i][j] = leq(p.elements[i], p.elements[j]);
  return p;
}

/// Chains with exactly one element at each rank of `ranks` (increasing).
inline std::uint64_t chains_at(const Poset& p, const std::vector<int>& ranks) {
  std::function<std::uint64_t(std::size_t, std::size_t)> extend = [&](std::size_t below,
                                                                     std::size_t k) -> std::uint64_t {
    if (k == ranks.size()) return 1;
    std::uint64_t total = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p.rank[j] != ranks[k]) continue;
      if (below != SIZE_MAX && !p.less(below, j)) continue;
      total += extend(j, k + 1);
    }
    return total;
  };
  return extend(SIZE_MAX, 0);
}

/// Number of maximal chains: chains through every rank from 1 to top.
inline std::uint64_t maximal_chains(const Poset& p) {
  const int top = *std::max_element(p.rank.begin(), p.rank.end());
  std::vector<int> all(static_cast<std::size_t>(top));
  std::iota(all.begin(), all.end(), 1);
  return chains_at(p, all);
}

inline std::map<int, std::size_t> rank_sizes(const Poset& p) {
  std::map<int, std::size_t> sizes;
  for (int r : p.rank) ++sizes[r];
  return sizes;
}

/// Largest union of j antichains, by checking every subset (size <= 20).
inline std::size_t max_union_antichains(const Poset& p, int j) {
  const std::size_t n = p.size();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) members.push_back(i);
    if (members.size() <= best) continue;
    // Longest chain inside the subset, by ranks (members sorted by rank).
    std::sort(members.begin(), members.end(), [&](auto a, auto b) { return p.rank[a] < p.rank[b]; });
    std::vector<int> h(members.size(), 1);
    int longest = 0;
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = 0; b < a; ++b)
        if (p.less(members[b], members[a])) h[a] = std::max(h[a], h[b] + 1);
      longest = std::max(longest, h[a]);
    }
    if (longest <= j) best = members.size();
  }
  return best;
}

inline std::uint64_t binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// Permutations of [n] with d descents, by listing S_n.
inline std::uint64_t eulerian(int n, int d) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::uint64_t count = 0;
  do {
    int des = 0;
    for (std::size_t i = 1; i < perm.size(); ++i) des += perm[i - 1] > perm[i];
    count += des == d;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace oracle

#endif  // SIGNPOSET_TESTS_ORACLES_HPP
