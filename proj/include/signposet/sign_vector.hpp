// Copyright 2026 The signposet Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SIGNPOSET_SIGN_VECTOR_HPP
#define SIGNPOSET_SIGN_VECTOR_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace signposet {

// Largest n supported by the bitmask block encoding.
inline constexpr int kMaxLength = 63;

enum class Sign : std::int8_t { minus = -1, zero = 0, plus = 1 };

char sign_char(Sign s);

/// A projective sign vector, stored as its canonical representative: the first
/// nonzero entry is always `+`.
class SignVector {
 public:
  SignVector() = default;

  /// Canonicalizes `raw` under v ~ -v. Throws std::invalid_argument for the
  /// zero vector or an empty/oversized input.
  static SignVector normalize(std::span<const Sign> raw);

  /// Parses a string over {'+','-','0'} and normalizes it.
  static SignVector parse(std::string_view text);

  int size() const { return static_cast<int>(entries_.size()); }
  Sign operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  std::span<const Sign> entries() const { return entries_; }

  int sign_changes() const { return sign_changes_; }
  int support_size() const;
  std::uint64_t support_mask() const;

  std::string str() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  std::vector<Sign> entries_;
  int sign_changes_ = 0;
};

/// Number of adjacent opposite-sign pairs in the nonzero subsequence.
int count_sign_changes(std::span<const Sign> entries);

/// Deterministic element order: lexicographic on sign strings ('+' < '-' < '0').
bool sign_string_less(const SignVector& a, const SignVector& b);

/// Order relation on projective sign vectors: some representative of `v` has
/// every entry in {0, w_i}.
bool projective_leq(const SignVector& v, const SignVector& w);

using BlockMask = std::uint64_t;

inline constexpr BlockMask element_bit(int a) { return BlockMask{1} << (a - 1); }

/// An element of R_{n,l} as an (l+1)-tuple of nonempty blocks of [n] with
/// max(A_i) < min(A_{i+1}). Block elements are 1-based; bit a-1 encodes a.
class BlockTuple {
 public:
  BlockTuple() = default;
  BlockTuple(int n, std::vector<BlockMask> blocks);

  static BlockTuple from_sets(int n, const std::vector<std::vector<int>>& blocks);

  int n() const { return n_; }
  int l() const { return static_cast<int>(blocks_.size()) - 1; }
  int block_count() const { return static_cast<int>(blocks_.size()); }

  /// 0-based block access.
  BlockMask block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }
  std::span<const BlockMask> blocks() const { return blocks_; }
  std::vector<int> block_elements(int i) const;

  int block_min(int i) const;
  int block_max(int i) const;

  BlockMask support() const;
  int support_size() const;
  /// |A_1 ∪ ... ∪ A_{l+1}| - l, in [1, n-l].
  int rank() const { return support_size() - l(); }

  /// Copy with element `a` added to 0-based block `i`; no validity check.
  BlockTuple with_element(int i, int a) const;

  /// "({2,4},{6},{8})"
  std::string str() const;

  friend bool operator==(const BlockTuple&, const BlockTuple&) = default;

 private:
  int n_ = 0;
  std::vector<BlockMask> blocks_;
};

/// Lexicographic order on (l+1)-tuples, each block compared as its increasing
/// element sequence (a proper prefix sorts first).
bool tuple_lex_less(const BlockTuple& a, const BlockTuple& b);

/// Componentwise containment A_i ⊆ B_i. Tuples must share n and l.
bool leq(const BlockTuple& x, const BlockTuple& y);

BlockTuple to_block_tuple(const SignVector& v);
SignVector from_block_tuple(const BlockTuple& t);

enum class CoverType { alpha, beta };

struct CoverInfo {
  int block = 0;  // 1-based, in [l+1]
  int added = 0;  // element of [n]
  CoverType type = CoverType::alpha;

  friend bool operator==(const CoverInfo&, const CoverInfo&) = default;
};

/// All y covering x in R_{n,l}, with the inserted element and its α/β type.
/// Ordered by block, then by inserted element.
std::vector<std::pair<BlockTuple, CoverInfo>> covers_R(const BlockTuple& x);

}  // namespace signposet

#endif  // SIGNPOSET_SIGN_VECTOR_HPP
