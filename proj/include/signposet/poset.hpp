// Copyright 2026 The signposet Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SIGNPOSET_POSET_HPP
#define SIGNPOSET_POSET_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "signposet/sign_vector.hpp"

namespace signposet {

using Index = std::uint32_t;

enum class Family { R, P, R_hat, P_hat, custom };

std::string family_name(Family f);
/// Accepts "R", "P", "R-hat", "P-hat" (case-insensitive family letter).
Family parse_family(std::string_view name);

/// Raised when a request exceeds an exhaustive-scale limit.
class guard_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An explicit finite graded poset. Immutable after construction.
///
/// Elements of the sign-vector families are sorted by sign string. A bounded
/// extension keeps that order for its interior and puts 0̂ first and 1̂ last.
class GradedPoset {
 public:
  GradedPoset() = default;

  /// Builds a poset from element ranks and (lower, upper) cover pairs. Each cover
  /// must join consecutive ranks.
  static GradedPoset from_covers(std::vector<int> ranks,
                                 const std::vector<std::pair<Index, Index>>& covers,
                                 std::vector<std::string> labels = {});

  Family family() const { return family_; }
  int n() const { return n_; }
  int l() const { return l_; }

  std::size_t size() const { return ranks_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  int rank(Index x) const { return ranks_[x]; }
  int min_rank() const { return min_rank_; }
  int max_rank() const { return max_rank_; }
  std::span<const int> ranks() const { return ranks_; }

  std::span<const Index> up(Index x) const { return up_[x]; }
  std::span<const Index> down(Index x) const { return down_[x]; }

  const std::string& label(Index x) const { return labels_[x]; }

  bool has_sign(Index x) const { return x < signs_.size() && signs_[x].size() > 0; }
  const SignVector& sign(Index x) const { return signs_[x]; }
  bool has_blocks(Index x) const { return x < blocks_.size() && blocks_[x].n() > 0; }
  const BlockTuple& blocks(Index x) const { return blocks_[x]; }

  std::optional<Index> bottom() const { return bottom_; }
  std::optional<Index> top() const { return top_; }
  bool is_bounded() const { return bottom_.has_value() && top_.has_value(); }

  std::optional<Index> find(const SignVector& v) const;
  std::optional<Index> find(const BlockTuple& t) const;

  /// Element count per rank, for ranks min_rank()..max_rank().
  std::vector<std::size_t> rank_sizes() const;
  std::vector<Index> elements_of_rank(int r) const;

  bool is_cover(Index x, Index y) const;

  /// (lower, upper) pairs, sorted.
  std::vector<std::pair<Index, Index>> cover_pairs() const;

 private:
  friend GradedPoset build_poset(int n, int l, Family family);
  friend GradedPoset bounded_extension(const GradedPoset& p);

  void finalize();

  Family family_ = Family::custom;
  int n_ = 0;
  int l_ = 0;
  std::vector<int> ranks_;
  std::vector<std::vector<Index>> up_;
  std::vector<std::vector<Index>> down_;
  std::vector<std::string> labels_;
  std::vector<SignVector> signs_;
  std::vector<BlockTuple> blocks_;
  std::optional<Index> bottom_;
  std::optional<Index> top_;
  std::size_t edge_count_ = 0;
  int min_rank_ = 0;
  int max_rank_ = -1;
};

/// R_{n,l} or P_{n,l} (0 <= l < n). R ranks run 1..n-l, P ranks 1..n.
GradedPoset build_poset(int n, int l, Family family);

/// Adjoins 0̂ and 1̂; ranks become 0..d+1.
GradedPoset bounded_extension(const GradedPoset& p);

/// Transitive closure of the cover relation, one bitset row per element.
class Comparability {
 public:
  explicit Comparability(const GradedPoset& p);

  bool less(Index x, Index y) const { return above_[x].test(y); }
  bool leq(Index x, Index y) const { return x == y || less(x, y); }
  bool comparable(Index x, Index y) const { return leq(x, y) || leq(y, x); }

  /// Strict up-set and down-set.
  const boost::dynamic_bitset<>& above(Index x) const { return above_[x]; }
  const boost::dynamic_bitset<>& below(Index x) const { return below_[x]; }

  std::vector<Index> above_list(Index x) const;
  std::size_t comparable_pairs() const;

 private:
  std::vector<boost::dynamic_bitset<>> above_;
  std::vector<boost::dynamic_bitset<>> below_;
};

struct LatticeReport {
  bool is_lattice = false;
  bool is_distributive = false;
  // A pair without a unique meet or join, when is_lattice is false.
  std::optional<std::pair<Index, Index>> non_lattice_pair;
  std::string non_lattice_reason;
  // x, y, z with x ∧ (y ∨ z) != (x ∧ y) ∨ (x ∧ z), when distributivity fails.
  std::optional<std::array<Index, 3>> non_distributive_triple;
};

/// Exhaustive meet/join and distributivity check. Requires a bounded poset.
LatticeReport lattice_report(const GradedPoset& p);

std::string to_json(const GradedPoset& p);
std::string to_dot(const GradedPoset& p);

}  // namespace signposet

#endif  // SIGNPOSET_POSET_HPP
