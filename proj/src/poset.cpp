// Copyright 2026 The signposet Authors
// SPDX-License-Identifier: Apache-2.0

#include "signposet/poset.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"

namespace signposet {

namespace {

// Exhaustive generation walks 3^n vectors.
constexpr int kMaxBuildLength = 12;

std::vector<SignVector> canonical_vectors(int n, int max_changes, bool exact) {
  std::vector<SignVector> out;
  std::vector<Sign> raw(static_cast<std::size_t>(n), Sign::zero);
  // Odometer over {0,+,-}^n.
  while (true) {
    std::size_t i = 0;
    for (; i < raw.size(); ++i) {
      if (raw[i] == Sign::zero) {
        raw[i] = Sign::plus;
        break;
      }
      if (raw[i] == Sign::plus) {
        raw[i] = Sign::minus;
        break;
      }
      raw[i] = Sign::zero;
    }
    if (i == raw.size()) break;
    auto first = std::find_if(raw.begin(), raw.end(), [](Sign s) { return s != Sign::zero; });
    if (*first != Sign::plus) continue;
    const int changes = count_sign_changes(raw);
    if (changes > max_changes || (exact && changes != max_changes)) continue;
    out.push_back(SignVector::normalize(raw));
  }
  std::sort(out.begin(), out.end(), sign_string_less);
  return out;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::R:
      return "R";
    case Family::P:
      return "P";
    case Family::R_hat:
      return "R-hat";
    case Family::P_hat:
      return "P-hat";
    case Family::custom:
      break;
  }
  return "custom";
}

Family parse_family(std::string_view name) {
  std::string s(name);
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (s == "R") return Family::R;
  if (s == "P") return Family::P;
  if (s == "R-HAT") return Family::R_hat;
  if (s == "P-HAT") return Family::P_hat;
  throw std::invalid_argument("unknown poset family '" + std::string(name) + "'");
}

GradedPoset GradedPoset::from_covers(std::vector<int> ranks,
                                     const std::vector<std::pair<Index, Index>>& covers,
                                     std::vector<std::string> labels) {
  GradedPoset p;
  const auto size = ranks.size();
  p.ranks_ = std::move(ranks);
  p.up_.assign(size, {});
  for (auto [x, y] : covers) {
    if (x >= size || y >= size) throw std::invalid_argument("cover refers to a missing element");
    if (p.ranks_[y] != p.ranks_[x] + 1) {
      throw std::invalid_argument("cover relations must join consecutive ranks");
    }
    p.up_[x].push_back(y);
  }
  if (labels.empty()) {
    for (std::size_t i = 0; i < size; ++i) labels.push_back("e" + std::to_string(i));
  } else if (labels.size() != size) {
    throw std::invalid_argument("label count does not match element count");
  }
  p.labels_ = std::move(labels);
  p.finalize();
  return p;
}

void GradedPoset::finalize() {
  const auto size = ranks_.size();
  down_.assign(size, {});
  edge_count_ = 0;
  for (Index x = 0; x < size; ++x) {
    auto& ups = up_[x];
    std::sort(ups.begin(), ups.end());
    ups.erase(std::unique(ups.begin(), ups.end()), ups.end());
    for (Index y : ups) down_[y].push_back(x);
    edge_count_ += ups.size();
  }
  for (auto& d : down_) std::sort(d.begin(), d.end());
  if (size > 0) {
    auto [lo, hi] = std::minmax_element(ranks_.begin(), ranks_.end());
    min_rank_ = *lo;
    max_rank_ = *hi;
  } else {
    min_rank_ = 0;
    max_rank_ = -1;
  }
}

std::optional<Index> GradedPoset::find(const SignVector& v) const {
  const Index begin = bottom_ ? 1 : 0;
  const Index end = static_cast<Index>(size()) - (top_ ? 1 : 0);
  if (begin >= end || signs_.empty()) return std::nullopt;
  auto first = signs_.begin() + begin;
  auto last = signs_.begin() + end;
  auto it = std::lower_bound(first, last, v, sign_string_less);
  if (it == last || !(*it == v)) return std::nullopt;
  return static_cast<Index>(it - signs_.begin());
}

std::optional<Index> GradedPoset::find(const BlockTuple& t) const {
  if (t.n() != n_) return std::nullopt;
  return find(from_block_tuple(t));
}

std::vector<std::size_t> GradedPoset::rank_sizes() const {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(std::max(0, max_rank_ - min_rank_ + 1)));
  for (int r : ranks_) ++sizes[static_cast<std::size_t>(r - min_rank_)];
  return sizes;
}

std::vector<Index> GradedPoset::elements_of_rank(int r) const {
  std::vector<Index> out;
  for (Index x = 0; x < size(); ++x) {
    if (ranks_[x] == r) out.push_back(x);
  }
  return out;
}

bool GradedPoset::is_cover(Index x, Index y) const {
  return std::binary_search(up_[x].begin(), up_[x].end(), y);
}

std::vector<std::pair<Index, Index>> GradedPoset::cover_pairs() const {
  std::vector<std::pair<Index, Index>> out;
  out.reserve(edge_count_);
  for (Index x = 0; x < size(); ++x) {
    for (Index y : up_[x]) out.emplace_back(x, y);
  }
  return out;
}

GradedPoset build_poset(int n, int l, Family family) {
  if (n < 1 || l < 0 || l >= n) {
    throw std::invalid_argument("require 0 <= l < n (got n=" + std::to_string(n) +
                                ", l=" + std::to_string(l) + ")");
  }
  if (family != Family::R && family != Family::P) {
    throw std::invalid_argument("build_poset builds the unbounded families R and P");
  }
  if (n > kMaxBuildLength) {
    throw guard_error("explicit construction is limited to n <= " +
                      std::to_string(kMaxBuildLength));
  }
  GradedPoset p;
  p.family_ = family;
  p.n_ = n;
  p.l_ = l;
  p.signs_ = canonical_vectors(n, l, family == Family::R);
  const auto size = p.signs_.size();
  p.ranks_.resize(size);
  p.up_.assign(size, {});
  p.labels_.reserve(size);
  if (family == Family::R) p.blocks_.reserve(size);

  for (Index x = 0; x < size; ++x) {
    const SignVector& v = p.signs_[x];
    p.labels_.push_back(v.str());
    if (family == Family::R) {
      p.blocks_.push_back(to_block_tuple(v));
      p.ranks_[x] = p.blocks_.back().rank();
    } else {
      p.ranks_[x] = v.support_size();
    }
  }
  for (Index x = 0; x < size; ++x) {
    if (family == Family::R) {
      for (const auto& [y, info] : covers_R(p.blocks_[x])) {
        p.up_[x].push_back(*p.find(y));
      }
      continue;
    }
    // P: switch one zero entry to either sign, keep results with <= l changes.
    std::vector<Sign> raw(p.signs_[x].entries().begin(), p.signs_[x].entries().end());
    for (std::size_t a = 0; a < raw.size(); ++a) {
      if (raw[a] != Sign::zero) continue;
      for (Sign s : {Sign::plus, Sign::minus}) {
        raw[a] = s;
        if (count_sign_changes(raw) <= l) p.up_[x].push_back(*p.find(SignVector::normalize(raw)));
      }
      raw[a] = Sign::zero;
    }
  }
  p.finalize();
  return p;
}

GradedPoset bounded_extension(const GradedPoset& p) {
  if (p.family() == Family::R_hat || p.family() == Family::P_hat || p.is_bounded()) {
    throw std::invalid_argument("poset is already bounded");
  }
  GradedPoset q;
  q.family_ = p.family() == Family::R   ? Family::R_hat
              : p.family() == Family::P ? Family::P_hat
                                        : Family::custom;
  q.n_ = p.n();
  q.l_ = p.l();
  const auto inner = static_cast<Index>(p.size());
  const Index bottom = 0;
  const Index top = inner + 1;
  q.ranks_.resize(inner + 2);
  q.up_.assign(inner + 2, {});
  q.labels_.reserve(inner + 2);
  q.labels_.push_back("0hat");
  const bool with_signs = inner > 0 && p.has_sign(0);
  const bool with_blocks = inner > 0 && p.has_blocks(0);
  if (with_signs) q.signs_.push_back(SignVector{});
  if (with_blocks) q.blocks_.push_back(BlockTuple{});

  const int shift = 1 - p.min_rank();
  int top_rank = 1;
  for (Index x = 0; x < inner; ++x) {
    q.ranks_[x + 1] = p.rank(x) + shift;
    top_rank = std::max(top_rank, q.ranks_[x + 1] + 1);
    q.labels_.push_back(p.label(x));
    if (with_signs) q.signs_.push_back(p.sign(x));
    if (with_blocks) q.blocks_.push_back(p.blocks(x));
  }
  q.labels_.push_back("1hat");
  if (with_signs) q.signs_.push_back(SignVector{});
  if (with_blocks) q.blocks_.push_back(BlockTuple{});
  q.ranks_[bottom] = 0;
  q.ranks_[top] = top_rank;

  for (Index x = 0; x < inner; ++x) {
    for (Index y : p.up(x)) q.up_[x + 1].push_back(y + 1);
    if (p.down(x).empty()) {
      if (q.ranks_[x + 1] != 1) throw std::invalid_argument("minimal element off the lowest rank");
      q.up_[bottom].push_back(x + 1);
    }
    if (p.up(x).empty()) {
      if (q.ranks_[x + 1] + 1 != top_rank) {
        throw std::invalid_argument("maximal element off the highest rank");
      }
      q.up_[x + 1].push_back(top);
    }
  }
  if (inner == 0) q.up_[bottom].push_back(top);
  q.bottom_ = bottom;
  q.top_ = top;
  q.finalize();
  return q;
}

Comparability::Comparability(const GradedPoset& p) {
  const auto size = p.size();
  above_.assign(size, boost::dynamic_bitset<>(size));
  below_.assign(size, boost::dynamic_bitset<>(size));
  std::vector<Index> order(size);
  for (Index x = 0; x < size; ++x) order[x] = x;
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return p.rank(a) > p.rank(b); });
  for (Index x : order) {
    for (Index y : p.up(x)) {
      above_[x].set(y);
      above_[x] |= above_[y];
    }
  }
  for (Index x = 0; x < size; ++x) {
    for (auto y = above_[x].find_first(); y != boost::dynamic_bitset<>::npos;
         y = above_[x].find_next(y)) {
      below_[y].set(x);
    }
  }
}

std::vector<Index> Comparability::above_list(Index x) const {
  std::vector<Index> out;
  for (auto y = above_[x].find_first(); y != boost::dynamic_bitset<>::npos;
       y = above_[x].find_next(y)) {
    out.push_back(static_cast<Index>(y));
  }
  return out;
}

std::size_t Comparability::comparable_pairs() const {
  std::size_t total = 0;
  for (const auto& row : above_) total += row.count();
  return total;
}

namespace {

constexpr Index kNone = static_cast<Index>(-1);

// Unique least element of `set` w.r.t. the closed up-sets, or kNone.
Index least_of(const boost::dynamic_bitset<>& set, const std::vector<boost::dynamic_bitset<>>& closed,
               const GradedPoset& p, bool least) {
  Index candidate = kNone;
  for (auto z = set.find_first(); z != boost::dynamic_bitset<>::npos; z = set.find_next(z)) {
    if (candidate == kNone ||
        (least ? p.rank(static_cast<Index>(z)) < p.rank(candidate)
               : p.rank(static_cast<Index>(z)) > p.rank(candidate))) {
      candidate = static_cast<Index>(z);
    }
  }
  if (candidate == kNone) return kNone;
  return set.is_subset_of(closed[candidate]) ? candidate : kNone;
}

}  // namespace

LatticeReport lattice_report(const GradedPoset& p) {
  if (!p.is_bounded()) throw std::invalid_argument("lattice_report needs a bounded poset");
  const auto size = static_cast<Index>(p.size());
  Comparability cmp(p);
  std::vector<boost::dynamic_bitset<>> up_closed(size), down_closed(size);
  for (Index x = 0; x < size; ++x) {
    up_closed[x] = cmp.above(x);
    up_closed[x].set(x);
    down_closed[x] = cmp.below(x);
    down_closed[x].set(x);
  }
  LatticeReport report;
  std::vector<Index> meet(static_cast<std::size_t>(size) * size);
  std::vector<Index> join(static_cast<std::size_t>(size) * size);
  for (Index x = 0; x < size; ++x) {
    for (Index y = x; y < size; ++y) {
      // The meet is the top of the common lower set; the join the bottom of the
      // common upper set.
      Index m = least_of(down_closed[x] & down_closed[y], down_closed, p, false);
      Index j = least_of(up_closed[x] & up_closed[y], up_closed, p, true);
      if (m == kNone || j == kNone) {
        report.non_lattice_pair = std::make_pair(x, y);
        report.non_lattice_reason = m == kNone ? "no unique meet" : "no unique join";
        return report;
      }
      meet[x * size + y] = meet[y * size + x] = m;
      join[x * size + y] = join[y * size + x] = j;
    }
  }
  report.is_lattice = true;
  report.is_distributive = true;
  for (Index x = 0; x < size; ++x) {
    for (Index y = 0; y < size; ++y) {
      for (Index z = y + 1; z < size; ++z) {
        const Index lhs = meet[x * size + join[y * size + z]];
        const Index rhs = join[meet[x * size + y] * size + meet[x * size + z]];
        if (lhs != rhs) {
          report.is_distributive = false;
          report.non_distributive_triple = std::array<Index, 3>{x, y, z};
          return report;
        }
      }
    }
  }
  return report;
}

std::string to_json(const GradedPoset& p) {
  nlohmann::ordered_json doc;
  doc["family"] = family_name(p.family());
  doc["n"] = p.n();
  doc["l"] = p.l();
  auto elements = nlohmann::ordered_json::array();
  auto ranks = nlohmann::ordered_json::array();
  for (Index x = 0; x < p.size(); ++x) {
    elements.push_back(p.label(x));
    ranks.push_back(p.rank(x));
  }
  doc["elements"] = std::move(elements);
  doc["ranks"] = std::move(ranks);
  auto covers = nlohmann::ordered_json::array();
  for (auto [x, y] : p.cover_pairs()) covers.push_back({x, y});
  doc["covers"] = std::move(covers);
  return doc.dump() + "\n";
}

std::string to_dot(const GradedPoset& p) {
  std::ostringstream out;
  std::string name = family_name(p.family());
  std::replace(name.begin(), name.end(), '-', '_');
  if (p.family() != Family::custom) {
    name += "_" + std::to_string(p.n()) + "_" + std::to_string(p.l());
  }
  out << "graph " << name << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  for (int r = p.min_rank(); r <= p.max_rank(); ++r) {
    out << "  { rank=same;";
    for (Index x : p.elements_of_rank(r)) {
      out << " e" << x << " [label=\"" << p.label(x) << "\"];";
    }
    out << " }\n";
  }
  for (auto [x, y] : p.cover_pairs()) out << "  e" << x << " -- e" << y << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace signposet
