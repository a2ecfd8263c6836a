// Copyright 2026 The signposet Authors
// SPDX-License-Identifier: Apache-2.0

#include "signposet/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace signposet {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

namespace {

// b^e with 0^0 = 1.
BigInt power(long base, long exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exponent));
  return out;
}

constexpr int kMaxChainLength = 7;
constexpr std::size_t kMaxBruteElements = 20000;
constexpr int kMaxEulerianLength = 11;

}  // namespace

RankSet rank_set(const std::vector<int>& ranks) {
  RankSet s = 0;
  for (int r : ranks) {
    if (r < 1 || r > FlagVector::kMaxRanks) throw std::invalid_argument("rank outside [1, 20]");
    s |= RankSet{1} << (r - 1);
  }
  return s;
}

std::vector<int> rank_list(RankSet s) {
  std::vector<int> out;
  for (; s != 0; s &= s - 1) out.push_back(std::countr_zero(s) + 1);
  return out;
}

std::string subset_string(RankSet s) {
  std::string out = "{";
  bool first = true;
  for (int r : rank_list(s)) {
    if (!first) out += ',';
    out += std::to_string(r);
    first = false;
  }
  return out + "}";
}

FlagVector::FlagVector(int d) : d_(d) {
  if (d < 0 || d > kMaxRanks) throw guard_error("flag vectors are limited to d <= 20 ranks");
  values_.assign(std::size_t{1} << d, BigInt(0));
}

bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coefficient(i) != b.coefficient(i)) return false;
  }
  return true;
}

std::string IntPolynomial::str() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt magnitude = abs(c);
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (i == 0 || magnitude != 1) out += magnitude.get_str();
    if (i >= 1) out += 't';
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

FlagVector flag_f_brute(const GradedPoset& p) {
  if (p.is_bounded() || p.bottom() || p.top()) {
    throw std::invalid_argument("flag_f_brute expects an unbounded poset");
  }
  if (p.size() > kMaxBruteElements) {
    throw guard_error("chain counting is limited to " + std::to_string(kMaxBruteElements) +
                      " elements");
  }
  if (p.size() > 0 && p.min_rank() != 1) {
    throw std::invalid_argument("flag_f_brute expects ranks labeled from 1");
  }
  const int d = std::max(0, p.max_rank());
  FlagVector alpha(d);
  alpha[0] = 1;
  const Comparability cmp(p);

  std::vector<Index> order(p.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return p.rank(a) < p.rank(b); });

  // ending[x][T]: chains with top element x whose other ranks form T ⊆ [rank(x)-1].
  std::vector<std::vector<BigInt>> ending(p.size());
  for (Index x : order) {
    const int r = p.rank(x);
    auto& row = ending[x];
    row.assign(std::size_t{1} << (r - 1), BigInt(0));
    row[0] = 1;
    const auto& below = cmp.below(x);
    for (auto y = below.find_first(); y != boost::dynamic_bitset<>::npos; y = below.find_next(y)) {
      const int ry = p.rank(static_cast<Index>(y));
      const RankSet bit = RankSet{1} << (ry - 1);
      const auto& lower = ending[y];
      for (RankSet t = 0; t < lower.size(); ++t) row[t | bit] += lower[t];
    }
    const RankSet own = RankSet{1} << (r - 1);
    for (RankSet t = 0; t < row.size(); ++t) alpha[t | own] += row[t];
  }
  return alpha;
}

BigInt flag_f_closed(int n, int l, const std::vector<int>& ranks) {
  if (n < 1 || l < 0 || l >= n) throw std::invalid_argument("require 0 <= l < n");
  std::vector<int> s = ranks;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw std::invalid_argument("rank set has repeated entries");
  }
  if (s.empty()) return 1;
  if (s.front() < 1 || s.back() > n - l) throw std::invalid_argument("rank set not within [n-l]");
  const long lo = s.front();
  const long hi = s.back();
  BigInt out = binomial(l + lo - 1, l) * binomial(n, l + hi) * binomial(2L * l + hi, hi - lo);
  // Multinomial (hi-lo; gaps) as a product of binomials.
  long remaining = hi - lo;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const long gap = s[i] - s[i - 1];
    out *= binomial(remaining, gap);
    remaining -= gap;
  }
  return out;
}

FlagVector flag_f_closed_all(int n, int l) {
  FlagVector alpha(n - l);
  for (RankSet s = 0; s < alpha.subset_count(); ++s) alpha[s] = flag_f_closed(n, l, rank_list(s));
  return alpha;
}

FlagVector flag_h(const FlagVector& alpha) {
  FlagVector beta = alpha;
  for (int i = 0; i < beta.d(); ++i) {
    const RankSet bit = RankSet{1} << i;
    for (RankSet s = 0; s < beta.subset_count(); ++s) {
      if (s & bit) beta[s] -= beta[s ^ bit];
    }
  }
  return beta;
}

FlagVector flag_f_from_h(const FlagVector& beta) {
  FlagVector alpha = beta;
  for (int i = 0; i < alpha.d(); ++i) {
    const RankSet bit = RankSet{1} << i;
    for (RankSet s = 0; s < alpha.subset_count(); ++s) {
      if (s & bit) alpha[s] += alpha[s ^ bit];
    }
  }
  return alpha;
}

namespace {

void labeled_dfs(const GradedPoset& hat, std::vector<Index>& elements,
                 std::vector<EdgeLabel>& labels,
                 const std::function<void(const LabeledChain&)>& visit) {
  const Index x = elements.back();
  if (x == *hat.top()) {
    LabeledChain chain{elements, labels, descent_set(labels)};
    visit(chain);
    return;
  }
  for (Index y : hat.up(x)) {
    elements.push_back(y);
    labels.push_back(label_edge(hat, x, y));
    labeled_dfs(hat, elements, labels, visit);
    labels.pop_back();
    elements.pop_back();
  }
}

}  // namespace

void for_each_labeled_maximal_chain(const GradedPoset& hat,
                                    const std::function<void(const LabeledChain&)>& visit) {
  if (!hat.is_bounded()) throw std::invalid_argument("expected a bounded poset");
  std::vector<Index> elements{*hat.bottom()};
  std::vector<EdgeLabel> labels;
  labeled_dfs(hat, elements, labels, visit);
}

FlagVector flag_h_descents(int n, int l, const RunOptions& options) {
  if (n > kMaxChainLength && !options.force) {
    throw guard_error("descent counting is limited to n <= " + std::to_string(kMaxChainLength));
  }
  const GradedPoset hat = bounded_extension(build_poset(n, l, Family::R));
  FlagVector beta(n - l);
  for_each_labeled_maximal_chain(hat, [&](const LabeledChain& chain) {
    beta[rank_set(chain.descents)] += 1;
  });
  return beta;
}

IntPolynomial h_from_f(const IntPolynomial& f, int d) {
  std::vector<BigInt> h(static_cast<std::size_t>(d) + 1, BigInt(0));
  for (int i = 0; i <= d; ++i) {
    const BigInt fi = f.coefficient(static_cast<std::size_t>(i));
    if (fi == 0) continue;
    for (int k = 0; k <= d - i; ++k) {
      BigInt term = fi * binomial(d - i, k);
      if (k % 2 == 1) term = -term;
      h[static_cast<std::size_t>(i + k)] += term;
    }
  }
  return IntPolynomial(std::move(h));
}

FHPolynomials fh_from_flag(const FlagVector& alpha) {
  const int d = alpha.d();
  const FlagVector beta = flag_h(alpha);
  std::vector<BigInt> f(static_cast<std::size_t>(d) + 1, BigInt(0));
  std::vector<BigInt> h(static_cast<std::size_t>(d) + 1, BigInt(0));
  for (RankSet s = 0; s < alpha.subset_count(); ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    f[size] += alpha[s];
    h[size] += beta[s];
  }
  FHPolynomials out{IntPolynomial(std::move(f)), IntPolynomial(std::move(h))};
  if (!(h_from_f(out.f, d) == out.h)) {
    throw std::logic_error("h-vector from flag h disagrees with (1-t)^d F(t/(1-t))");
  }
  return out;
}

BigInt max_chain_count(int n, int l) {
  if (n < 1 || l < 0 || l >= n) throw std::invalid_argument("require 0 <= l < n");
  return binomial(n + l, 2L * l + 1) * factorial(n - l - 1);
}

std::vector<BlockTuple> chain_from_key(const MaximalChainKey& key, int n, int l) {
  if (n < 1 || l < 0 || l >= n) throw std::invalid_argument("require 0 <= l < n");
  const auto& c = key.subset;
  if (static_cast<int>(c.size()) != 2 * l + 1 || !std::is_sorted(c.begin(), c.end()) ||
      std::adjacent_find(c.begin(), c.end()) != c.end() || c.front() < 1 || c.back() > n + l) {
    throw std::invalid_argument("chain key needs an increasing (2l+1)-subset of [n+l]");
  }
  std::vector<int> sorted = key.permutation;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> identity(static_cast<std::size_t>(n - l - 1));
  std::iota(identity.begin(), identity.end(), 1);
  if (sorted != identity) throw std::invalid_argument("chain key needs a permutation of [n-l-1]");

  // c is 1-indexed in the formulas: a_i = c_{2i-1} - i + 1, b_i = c_{2i} - i.
  std::vector<int> a(static_cast<std::size_t>(l) + 1);
  std::vector<int> b(static_cast<std::size_t>(l));
  for (int i = 1; i <= l + 1; ++i) a[i - 1] = c[static_cast<std::size_t>(2 * i - 2)] - i + 1;
  for (int i = 1; i <= l; ++i) b[i - 1] = c[static_cast<std::size_t>(2 * i - 1)] - i;

  std::vector<BlockMask> start;
  for (int ai : a) start.push_back(element_bit(ai));
  // Top element: blocks cut right after each b_i.
  std::vector<int> block_of(static_cast<std::size_t>(n) + 1);
  for (int e = 1, block = 0; e <= n; ++e) {
    block_of[e] = block;
    if (block < l && e == b[block]) ++block;
  }
  std::vector<BlockTuple> chain{BlockTuple(n, std::move(start))};
  std::vector<int> rest;
  for (int e = 1; e <= n; ++e) {
    if (std::find(a.begin(), a.end(), e) == a.end()) rest.push_back(e);
  }
  for (int p : key.permutation) {
    const int e = rest[static_cast<std::size_t>(p - 1)];
    chain.push_back(chain.back().with_element(block_of[e], e));
  }
  return chain;
}

std::vector<MaximalChainKey> all_chain_keys(int n, int l) {
  std::vector<MaximalChainKey> keys;
  const int universe = n + l;
  const int k = 2 * l + 1;
  std::vector<int> subset(static_cast<std::size_t>(k));
  std::iota(subset.begin(), subset.end(), 1);
  std::vector<int> perm(static_cast<std::size_t>(n - l - 1));
  while (true) {
    std::iota(perm.begin(), perm.end(), 1);
    do {
      keys.push_back({subset, perm});
    } while (std::next_permutation(perm.begin(), perm.end()));
    int i = k - 1;
    while (i >= 0 && subset[i] == universe - k + i + 1) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  return keys;
}

BigInt eulerian(int n, int d) {
  if (n < 0 || d < 0) throw std::invalid_argument("eulerian needs n, d >= 0");
  if (n > kMaxEulerianLength) {
    throw guard_error("descent counting over S_n is limited to n <= " +
                      std::to_string(kMaxEulerianLength));
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  BigInt count = 0;
  do {
    int descents = 0;
    for (std::size_t r = 1; r < perm.size(); ++r) descents += perm[r - 1] > perm[r] ? 1 : 0;
    if (descents == d) count += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

bool eulerian_bijection_check(int n) {
  if (n > kMaxChainLength) throw guard_error("bijection check is limited to n <= 7");
  const GradedPoset hat = bounded_extension(build_poset(n, 0, Family::R));
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    std::vector<Index> elements{*hat.bottom()};
    BlockMask prefix = 0;
    for (int value : perm) {
      prefix |= element_bit(value);
      elements.push_back(*hat.find(BlockTuple(n, {prefix})));
    }
    elements.push_back(*hat.top());
    const LabeledChain chain = label_chain(hat, std::move(elements));
    std::vector<int> descents;
    for (std::size_t r = 1; r < perm.size(); ++r) {
      if (perm[r - 1] > perm[r]) descents.push_back(static_cast<int>(r));
    }
    if (chain.descents != descents) return false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

namespace {

void sum_compositions(int remaining, int parts, const BigInt& ways, BigInt& total) {
  if (parts == 0) {
    if (remaining == 0) total += ways;
    return;
  }
  for (int part = 1; part <= remaining - (parts - 1); ++part) {
    sum_compositions(remaining - part, parts - 1, ways * binomial(remaining, part), total);
  }
}

}  // namespace

std::pair<BigInt, BigInt> surjection_identity(int s, int d) {
  if (s < 0 || d < 1) throw std::invalid_argument("surjection identity needs s >= 0, d >= 1");
  BigInt lhs = 0;
  sum_compositions(s, d, BigInt(1), lhs);
  BigInt rhs = 0;
  for (int i = 0; i <= d; ++i) {
    BigInt term = binomial(d, i) * power(d - i, s);
    rhs += i % 2 == 0 ? term : BigInt(-term);
  }
  return {lhs, rhs};
}

BigInt f_d_closed(int n, int l, int d) {
  if (n < 1 || l < 0 || l >= n) throw std::invalid_argument("require 0 <= l < n");
  if (d < 0 || d > n - l - 1) throw std::invalid_argument("require 0 <= d <= n-l-1");
  BigInt total = 0;
  for (int r = 1; r <= n - l; ++r) {
    for (int s = 0; l + r + s <= n; ++s) {
      const BigInt base =
          binomial(l + r - 1, l) * binomial(n, l + r + s) * binomial(2L * l + r + s, s);
      for (int i = 0; i <= d; ++i) {
        BigInt term = base * binomial(d, i) * power(d - i, s);
        total += i % 2 == 0 ? term : BigInt(-term);
      }
    }
  }
  return total;
}

IntPolynomial f_series_closed(int n, int l) {
  std::vector<BigInt> f{BigInt(1)};
  for (int d = 0; d <= n - l - 1; ++d) f.push_back(f_d_closed(n, l, d));
  return IntPolynomial(std::move(f));
}

IntPolynomial h_series_closed(int n, int l) {
  if (n < 1 || l < 0 || l >= n) throw std::invalid_argument("require 0 <= l < n");
  const int d = n - l;
  // Inner series 1 + Σ_j c_j t^{j+1}; only j <= d-1 reaches degree d.
  std::vector<BigInt> inner(static_cast<std::size_t>(d) + 1, BigInt(0));
  inner[0] = 1;
  for (int j = 0; j <= d - 1; ++j) {
    BigInt c = 0;
    // binom(n, l+r+s+1) vanishes unless l+r+s+1 <= n.
    for (int s = 0; l + s + 1 <= n; ++s) {
      for (int r = 0; l + r + s + 1 <= n; ++r) {
        c += binomial(l + r, l) * binomial(n, l + r + s + 1) * binomial(2L * l + r + s + 1, s) *
             power(j, s);
      }
    }
    inner[static_cast<std::size_t>(j) + 1] = c;
  }
  std::vector<BigInt> h(static_cast<std::size_t>(d) + 1, BigInt(0));
  for (int k = 0; k <= d; ++k) {
    BigInt weight = binomial(d, k);
    if (k % 2 == 1) weight = -weight;
    for (int i = 0; i + k <= d; ++i) h[static_cast<std::size_t>(i + k)] += weight * inner[i];
  }
  return IntPolynomial(std::move(h));
}

BigInt h1_closed(int n, int l) {
  if (n < 1 || l < 0 || l >= n) throw std::invalid_argument("require 0 <= l < n");
  BigInt out = l - n;
  out += (l + 1) % 2 == 0 ? 1 : -1;
  for (int i = 0; i <= l; ++i) {
    BigInt term = binomial(n, i) * power(2, n - i);
    out += (l - i) % 2 == 0 ? term : BigInt(-term);
  }
  return out;
}

}  // namespace signposet
