// Copyright 2026 The signposet Authors
// SPDX-License-Identifier: Apache-2.0

#include "signposet/sign_vector.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace signposet {

char sign_char(Sign s) {
  switch (s) {
    case Sign::plus:
      return '+';
    case Sign::minus:
      return '-';
    case Sign::zero:
      break;
  }
  return '0';
}

int count_sign_changes(std::span<const Sign> entries) {
  int changes = 0;
  Sign last = Sign::zero;
  for (Sign s : entries) {
    if (s == Sign::zero) continue;
    if (last != Sign::zero && s != last) ++changes;
    last = s;
  }
  return changes;
}

SignVector SignVector::normalize(std::span<const Sign> raw) {
  if (raw.empty() || raw.size() > static_cast<std::size_t>(kMaxLength)) {
    throw std::invalid_argument("sign vector length must be in [1, 63]");
  }
  auto first = std::find_if(raw.begin(), raw.end(), [](Sign s) { return s != Sign::zero; });
  if (first == raw.end()) {
    throw std::invalid_argument("the zero sign vector is not a projective sign vector");
  }
  SignVector v;
  v.entries_.assign(raw.begin(), raw.end());
  if (*first == Sign::minus) {
    for (Sign& s : v.entries_) s = static_cast<Sign>(-static_cast<int>(s));
  }
  v.sign_changes_ = count_sign_changes(v.entries_);
  return v;
}

SignVector SignVector::parse(std::string_view text) {
  std::vector<Sign> raw;
  raw.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '+':
        raw.push_back(Sign::plus);
        break;
      case '-':
        raw.push_back(Sign::minus);
        break;
      case '0':
        raw.push_back(Sign::zero);
        break;
      default:
        throw std::invalid_argument(std::string("invalid sign character '") + c + "'");
    }
  }
  return normalize(raw);
}

int SignVector::support_size() const {
  return static_cast<int>(std::count_if(entries_.begin(), entries_.end(),
                                        [](Sign s) { return s != Sign::zero; }));
}

std::uint64_t SignVector::support_mask() const {
  std::uint64_t mask = 0;
  for (int i = 0; i < size(); ++i) {
    if (entries_[static_cast<std::size_t>(i)] != Sign::zero) mask |= element_bit(i + 1);
  }
  return mask;
}

std::string SignVector::str() const {
  std::string out;
  out.reserve(entries_.size());
  for (Sign s : entries_) out.push_back(sign_char(s));
  return out;
}

bool sign_string_less(const SignVector& a, const SignVector& b) {
  // ASCII order of the symbols: '+' < '-' < '0'.
  auto key = [](Sign s) {
    switch (s) {
      case Sign::plus:
        return 0;
      case Sign::minus:
        return 1;
      case Sign::zero:
        break;
    }
    return 2;
  };
  return std::lexicographical_compare(a.entries().begin(), a.entries().end(), b.entries().begin(),
                                      b.entries().end(),
                                      [&](Sign x, Sign y) { return key(x) < key(y); });
}

bool projective_leq(const SignVector& v, const SignVector& w) {
  if (v.size() != w.size()) return false;
  bool same = true;
  bool flipped = true;
  for (int i = 0; i < v.size() && (same || flipped); ++i) {
    Sign vi = v[i];
    if (vi == Sign::zero) continue;
    same = same && vi == w[i];
    flipped = flipped && static_cast<int>(vi) == -static_cast<int>(w[i]);
  }
  return same || flipped;
}

namespace {

int lowest_element(BlockMask m) { return std::countr_zero(m) + 1; }
int highest_element(BlockMask m) { return 64 - std::countl_zero(m); }

}  // namespace

BlockTuple::BlockTuple(int n, std::vector<BlockMask> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n_ < 1 || n_ > kMaxLength) throw std::invalid_argument("n must be in [1, 63]");
  if (blocks_.empty() || static_cast<int>(blocks_.size()) > n_) {
    throw std::invalid_argument("a block tuple needs between 1 and n blocks");
  }
  const BlockMask universe = n_ == 64 ? ~BlockMask{0} : (BlockMask{1} << n_) - 1;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i] == 0) throw std::invalid_argument("blocks must be nonempty");
    if ((blocks_[i] & ~universe) != 0) throw std::invalid_argument("block element outside [n]");
    if (i > 0 && highest_element(blocks_[i - 1]) >= lowest_element(blocks_[i])) {
      throw std::invalid_argument("blocks must satisfy max(A_i) < min(A_{i+1})");
    }
  }
}

BlockTuple BlockTuple::from_sets(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<BlockMask> masks;
  masks.reserve(blocks.size());
  for (const auto& block : blocks) {
    BlockMask m = 0;
    for (int a : block) {
      if (a < 1 || a > n) throw std::invalid_argument("block element outside [n]");
      m |= element_bit(a);
    }
    masks.push_back(m);
  }
  return BlockTuple(n, std::move(masks));
}

std::vector<int> BlockTuple::block_elements(int i) const {
  std::vector<int> out;
  for (BlockMask m = block(i); m != 0; m &= m - 1) out.push_back(lowest_element(m));
  return out;
}

int BlockTuple::block_min(int i) const { return lowest_element(block(i)); }
int BlockTuple::block_max(int i) const { return highest_element(block(i)); }

BlockMask BlockTuple::support() const {
  BlockMask m = 0;
  for (BlockMask b : blocks_) m |= b;
  return m;
}

int BlockTuple::support_size() const { return std::popcount(support()); }

BlockTuple BlockTuple::with_element(int i, int a) const {
  BlockTuple t = *this;
  t.blocks_[static_cast<std::size_t>(i)] |= element_bit(a);
  return t;
}

std::string BlockTuple::str() const {
  std::string out = "(";
  for (int i = 0; i < block_count(); ++i) {
    if (i > 0) out += ',';
    out += '{';
    bool first = true;
    for (int a : block_elements(i)) {
      if (!first) out += ',';
      out += std::to_string(a);
      first = false;
    }
    out += '}';
  }
  out += ')';
  return out;
}

bool tuple_lex_less(const BlockTuple& a, const BlockTuple& b) {
  const int blocks = std::min(a.block_count(), b.block_count());
  for (int i = 0; i < blocks; ++i) {
    if (a.block(i) == b.block(i)) continue;
    auto ea = a.block_elements(i);
    auto eb = b.block_elements(i);
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
  }
  return a.block_count() < b.block_count();
}

bool leq(const BlockTuple& x, const BlockTuple& y) {
  if (x.n() != y.n() || x.l() != y.l()) {
    throw std::invalid_argument("leq: tuples from different R_{n,l}");
  }
  for (int i = 0; i < x.block_count(); ++i) {
    if ((x.block(i) & ~y.block(i)) != 0) return false;
  }
  return true;
}

BlockTuple to_block_tuple(const SignVector& v) {
  std::vector<BlockMask> blocks;
  Sign current = Sign::zero;
  for (int i = 0; i < v.size(); ++i) {
    Sign s = v[i];
    if (s == Sign::zero) continue;
    if (s != current) {
      blocks.push_back(0);
      current = s;
    }
    blocks.back() |= element_bit(i + 1);
  }
  return BlockTuple(v.size(), std::move(blocks));
}

SignVector from_block_tuple(const BlockTuple& t) {
  std::vector<Sign> raw(static_cast<std::size_t>(t.n()), Sign::zero);
  for (int j = 0; j < t.block_count(); ++j) {
    const Sign s = j % 2 == 0 ? Sign::plus : Sign::minus;
    for (int a : t.block_elements(j)) raw[static_cast<std::size_t>(a - 1)] = s;
  }
  return SignVector::normalize(raw);
}

std::vector<std::pair<BlockTuple, CoverInfo>> covers_R(const BlockTuple& x) {
  std::vector<std::pair<BlockTuple, CoverInfo>> out;
  const int blocks = x.block_count();
  for (int i = 0; i < blocks; ++i) {
    const int lo = i > 0 ? x.block_max(i - 1) : 0;
    const int hi = i + 1 < blocks ? x.block_min(i + 1) : x.n() + 1;
    const int top = x.block_max(i);
    for (int a = lo + 1; a < hi; ++a) {
      if ((x.block(i) & element_bit(a)) != 0) continue;
      CoverInfo info{i + 1, a, a < top ? CoverType::alpha : CoverType::beta};
      out.emplace_back(x.with_element(i, a), info);
    }
  }
  return out;
}

}  // namespace signposet
