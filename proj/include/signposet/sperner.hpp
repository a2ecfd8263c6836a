// Copyright 2026 The signposet Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SIGNPOSET_SPERNER_HPP
#define SIGNPOSET_SPERNER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "signposet/enumeration.hpp"
#include "signposet/poset.hpp"
#include "signposet/shelling.hpp"

namespace signposet {

using Rational = mpq_class;

/// "p/q", or "p" when the denominator is 1.
std::string fraction_string(const Rational& q);

/// W_r of R_{n,l} (r = 1..n-l) or P_{n,l} (r = 1..n) from the closed formulas.
std::vector<BigInt> whitney(int n, int l, Family family);

/// s_{i-1} s_{i+1} <= s_i^2 at every interior index.
bool is_log_concave(std::span<const BigInt> s);

/// s_r = Σ_{i=0}^{l} binom(r-1, i) for r = 1..r_max.
std::vector<BigInt> partial_binomial_sums(int l, int r_max);

/// Nonnegative exact weights on the cover edges of a poset, stored parallel to
/// poset.up(x). Keeps a reference to the poset.
class RationalFlow {
 public:
  explicit RationalFlow(const GradedPoset& poset);

  const GradedPoset& poset() const { return *poset_; }
  const Rational& value(Index x, std::size_t k) const { return values_[x][k]; }
  Rational value_between(Index x, Index y) const;
  void set(Index x, std::size_t k, Rational v) { values_[x][k] = std::move(v); }

 private:
  const GradedPoset* poset_;
  std::vector<std::vector<Rational>> values_;
};

/// Weight of x ⋖ y: 1 when the added element has a single receiving block,
/// otherwise the prefix (lower block) or suffix (upper block) share of |support(x)|.
Rational block_insertion_weight(const BlockTuple& x, const BlockTuple& y);

/// The normalized flow on R_{n,l}.
RationalFlow flow_R(const GradedPoset& r_poset);

/// Normalized flow on P_{n,l} for l ∈ {0, 1, n-1}; std::invalid_argument otherwise.
RationalFlow flow_P(const GradedPoset& p_poset);

RationalFlow constant_flow(const GradedPoset& poset, const Rational& value = 1);

struct RankFlowSums {
  int rank = 0;
  std::optional<Rational> up;    // common Σ f(x ⋖ ·) over x of this rank
  std::optional<Rational> down;  // common Σ f(· ⋖ y) over y of this rank
};

struct FlowViolation {
  std::string condition;  // "NF1", "NF2", "negative", "expected-up", "expected-down"
  int rank = 0;
  std::string first;
  std::string second;
  std::string detail;
};

struct FlowReport {
  std::vector<RankFlowSums> ranks;
  std::vector<FlowViolation> violations;
  bool passed() const { return violations.empty(); }
};

/// Checks per-rank constancy and positivity of up-sums (ranks below the top)
/// and down-sums (ranks above the bottom). On R_{n,l} also checks up-sum
/// n-l-r and down-sum r(l+r+1)/(l+r) at rank r+1.
FlowReport verify_flow(const RationalFlow& flow);

std::string to_json(const FlowReport& report);
std::string flow_to_json(const RationalFlow& flow);

struct AntichainCertificate {
  std::vector<Index> antichain;
  std::vector<std::vector<Index>> chain_cover;
  int j = 1;
};

/// Maximum antichain and minimum chain cover of equal size (Dilworth via
/// bipartite matching on the comparability relation).
AntichainCertificate max_antichain(const GradedPoset& p);

/// Validates an antichain certificate against the poset: incomparability,
/// chain partition, equal sizes.
bool check_certificate(const GradedPoset& p, const AntichainCertificate& cert);

struct UnionCertificate {
  std::size_t value = 0;
  int j = 1;
  // Chain partition with Σ min(|C|, j) == value.
  std::vector<std::vector<Index>> chain_partition;
};

/// Largest union of j antichains, from min-cost flow, with a chain partition
/// certifying the upper bound.
UnionCertificate max_union_antichains(const GradedPoset& p, int j);

/// Subset enumeration, for posets with at most 20 elements.
std::size_t max_union_antichains_brute(const GradedPoset& p, int j);

/// Σ_C min(|C|, j) after checking the partition consists of chains.
std::optional<std::size_t> chain_partition_bound(const GradedPoset& p,
                                                 const std::vector<std::vector<Index>>& chains,
                                                 int j);

struct SpernerLevel {
  int j = 0;
  std::size_t max_union = 0;
  std::size_t largest_ranks = 0;
  bool holds = false;
};

struct SpernerVerdict {
  bool holds = false;
  std::vector<SpernerLevel> levels;
};

SpernerVerdict is_sperner(const GradedPoset& p);
SpernerVerdict is_strongly_sperner(const GradedPoset& p);

/// Normalized matching between ranks r and r+1 via max flow with supplies
/// W_{r+1} on rank r and demands W_r on rank r+1.
bool lym_rank_pair_check(const GradedPoset& p, int r);

struct SweepRow {
  int n = 0;
  int l = 0;
  std::size_t size = 0;
  std::size_t max_antichain = 0;
  std::size_t max_whitney = 0;
  bool sperner = false;
};

struct SweepTable {
  std::vector<SweepRow> rows;
  bool all_pass() const;
};

/// P_{n,l} for every 0 <= l < n <= n_max. Refuses n_max > 9 unless forced.
SweepTable sperner_sweep(int n_max, const RunOptions& options = {});

std::string to_csv(const SweepTable& table);

}  // namespace signposet

#endif  // SIGNPOSET_SPERNER_HPP
