// Copyright 2026 The signposet Authors
// SPDX-License-Identifier: Apache-2.0

#include "signposet/shelling.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "json.hpp"

namespace signposet {

EdgeLabel EdgeLabel::set_label(std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  EdgeLabel label;
  label.kind_ = Kind::set;
  label.set_ = std::move(elements);
  return label;
}

EdgeLabel EdgeLabel::triple(CoverType type, int block, int element) {
  EdgeLabel label;
  label.kind_ = type == CoverType::alpha ? Kind::alpha : Kind::beta;
  label.block_ = block;
  label.element_ = element;
  return label;
}

std::string EdgeLabel::str() const {
  if (kind_ == Kind::set) {
    std::string out = "{";
    for (std::size_t i = 0; i < set_.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(set_[i]);
    }
    return out + "}";
  }
  return std::string("(") + (kind_ == Kind::alpha ? "a" : "b") + "," + std::to_string(block_) +
         "," + std::to_string(element_) + ")";
}

std::strong_ordering operator<=>(const EdgeLabel& a, const EdgeLabel& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  switch (a.kind_) {
    case EdgeLabel::Kind::set:
      return std::lexicographical_compare_three_way(a.set_.begin(), a.set_.end(), b.set_.begin(),
                                                    b.set_.end());
    case EdgeLabel::Kind::alpha:
      if (a.block_ != b.block_) return a.block_ <=> b.block_;
      return a.element_ <=> b.element_;
    case EdgeLabel::Kind::beta:
      if (a.block_ != b.block_) return b.block_ <=> a.block_;
      return a.element_ <=> b.element_;
  }
  return std::strong_ordering::equal;
}

namespace {

void require_r_hat(const GradedPoset& hat) {
  if (hat.family() != Family::R_hat) {
    throw std::invalid_argument("edge labels are defined on the bounded poset R-hat_{n,l}");
  }
}

bool hat_leq(const GradedPoset& hat, Index x, Index y) {
  if (x == y || x == *hat.bottom() || y == *hat.top()) return true;
  if (y == *hat.bottom() || x == *hat.top()) return false;
  return leq(hat.blocks(x), hat.blocks(y));
}

// Saturated chain from x to y (x ≤ y in R_{n,l}) with the unique increasing
// insertion order.
std::vector<BlockTuple> increasing_path(const BlockTuple& x, const BlockTuple& y) {
  std::vector<BlockTuple> path{x};
  BlockTuple current = x;
  const int blocks = x.block_count();
  for (int i = 0; i < blocks; ++i) {
    const int top = x.block_max(i);
    for (int a : y.block_elements(i)) {
      if (a < top && (x.block(i) & element_bit(a)) == 0) {
        current = current.with_element(i, a);
        path.push_back(current);
      }
    }
  }
  for (int i = blocks - 1; i >= 0; --i) {
    const int top = x.block_max(i);
    for (int a : y.block_elements(i)) {
      if (a > top) {
        current = current.with_element(i, a);
        path.push_back(current);
      }
    }
  }
  return path;
}

// The complete tuple whose blocks end at the block maxima of x.
BlockTuple complete_tuple(const BlockTuple& x) {
  std::vector<BlockMask> blocks;
  int start = 1;
  for (int i = 0; i < x.block_count(); ++i) {
    const int end = i + 1 == x.block_count() ? x.n() : x.block_max(i);
    BlockMask m = 0;
    for (int a = start; a <= end; ++a) m |= element_bit(a);
    blocks.push_back(m);
    start = end + 1;
  }
  return BlockTuple(x.n(), std::move(blocks));
}

BlockTuple atom_of_minima(const BlockTuple& y) {
  std::vector<BlockMask> blocks;
  for (int i = 0; i < y.block_count(); ++i) blocks.push_back(element_bit(y.block_min(i)));
  return BlockTuple(y.n(), std::move(blocks));
}

}  // namespace

EdgeLabel label_edge(const GradedPoset& hat, Index x, Index y) {
  require_r_hat(hat);
  if (x >= hat.size() || y >= hat.size() || !hat.is_cover(x, y)) {
    throw std::invalid_argument("label_edge: not a cover relation");
  }
  if (x == *hat.bottom()) {
    const BlockTuple& atom = hat.blocks(y);
    std::vector<int> elements;
    for (int i = 0; i < atom.block_count(); ++i) elements.push_back(atom.block_min(i));
    return EdgeLabel::set_label(std::move(elements));
  }
  if (y == *hat.top()) return EdgeLabel::triple(CoverType::beta, hat.l() + 1, hat.n() + 1);
  const BlockTuple& a = hat.blocks(x);
  const BlockTuple& b = hat.blocks(y);
  for (int i = 0; i < a.block_count(); ++i) {
    const BlockMask added = b.block(i) & ~a.block(i);
    if (added == 0) continue;
    const int element = std::countr_zero(added) + 1;
    const CoverType type = element < a.block_max(i) ? CoverType::alpha : CoverType::beta;
    return EdgeLabel::triple(type, i + 1, element);
  }
  throw std::logic_error("label_edge: cover without an inserted element");
}

std::vector<int> descent_set(std::span<const EdgeLabel> labels) {
  std::vector<int> out;
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (labels[i - 1] > labels[i]) out.push_back(static_cast<int>(i));
  }
  return out;
}

LabeledChain label_chain(const GradedPoset& hat, std::vector<Index> elements) {
  LabeledChain chain;
  chain.elements = std::move(elements);
  for (std::size_t i = 1; i < chain.elements.size(); ++i) {
    chain.labels.push_back(label_edge(hat, chain.elements[i - 1], chain.elements[i]));
  }
  chain.descents = descent_set(chain.labels);
  return chain;
}

int interval_case(const GradedPoset& hat, Index x, Index y) {
  const bool from_bottom = x == *hat.bottom();
  const bool to_top = y == *hat.top();
  if (from_bottom && to_top) return 4;
  if (to_top) return 3;
  if (from_bottom) return 2;
  return 1;
}

LabeledChain increasing_chain(const GradedPoset& hat, Index x, Index y) {
  require_r_hat(hat);
  if (x >= hat.size() || y >= hat.size() || !hat_leq(hat, x, y)) {
    throw std::invalid_argument("increasing_chain: x and y are not comparable with x <= y");
  }
  if (x == y) return label_chain(hat, {x});

  std::vector<BlockTuple> path;
  switch (interval_case(hat, x, y)) {
    case 1:
      path = increasing_path(hat.blocks(x), hat.blocks(y));
      break;
    case 2:
      path = increasing_path(atom_of_minima(hat.blocks(y)), hat.blocks(y));
      break;
    case 3:
      path = increasing_path(hat.blocks(x), complete_tuple(hat.blocks(x)));
      break;
    default: {
      std::vector<BlockMask> first;
      for (int i = 1; i <= hat.l() + 1; ++i) first.push_back(element_bit(i));
      const BlockTuple atom(hat.n(), std::move(first));
      path = increasing_path(atom, complete_tuple(atom));
    }
  }
  std::vector<Index> elements;
  if (x == *hat.bottom()) elements.push_back(x);
  for (const BlockTuple& t : path) elements.push_back(*hat.find(t));
  if (y == *hat.top()) elements.push_back(y);
  return label_chain(hat, std::move(elements));
}

namespace {

void dfs_chains(const GradedPoset& p, const Comparability& cmp, Index y, std::vector<Index>& stack,
                const std::function<bool(std::span<const Index>)>& visit, bool& keep_going) {
  const Index x = stack.back();
  if (x == y) {
    keep_going = visit(stack);
    return;
  }
  for (Index z : p.up(x)) {
    if (!cmp.leq(z, y)) continue;
    stack.push_back(z);
    dfs_chains(p, cmp, y, stack, visit, keep_going);
    stack.pop_back();
    if (!keep_going) return;
  }
}

}  // namespace

void for_each_maximal_chain(const GradedPoset& p, const Comparability& cmp, Index x, Index y,
                            const std::function<bool(std::span<const Index>)>& visit) {
  if (!cmp.leq(x, y)) return;
  std::vector<Index> stack{x};
  bool keep_going = true;
  dfs_chains(p, cmp, y, stack, visit, keep_going);
}

namespace {

constexpr int kMaxElLength = 7;

struct ElementResult {
  std::uint64_t intervals = 0;
  std::uint64_t chains = 0;
  std::array<std::uint64_t, 4> cases{};
  std::vector<ELViolation> violations;
};

// Label of every cover edge, parallel to p.up(x).
std::vector<std::vector<EdgeLabel>> cover_labels(const GradedPoset& hat) {
  std::vector<std::vector<EdgeLabel>> labels(hat.size());
  for (Index x = 0; x < hat.size(); ++x) {
    for (Index y : hat.up(x)) labels[x].push_back(label_edge(hat, x, y));
  }
  return labels;
}

const EdgeLabel& lookup(const GradedPoset& hat, const std::vector<std::vector<EdgeLabel>>& labels,
                        Index x, Index y) {
  auto ups = hat.up(x);
  auto it = std::lower_bound(ups.begin(), ups.end(), y);
  return labels[x][static_cast<std::size_t>(it - ups.begin())];
}

ElementResult check_from(const GradedPoset& hat, const Comparability& cmp,
                         const std::vector<std::vector<EdgeLabel>>& labels, Index x) {
  ElementResult result;
  for (Index y : cmp.above_list(x)) {
    ++result.intervals;
    ++result.cases[static_cast<std::size_t>(interval_case(hat, x, y) - 1)];
    auto fail = [&](std::string reason) {
      result.violations.push_back({hat.label(x), hat.label(y), std::move(reason)});
    };

    std::uint64_t increasing = 0;
    std::vector<Index> found;
    for_each_maximal_chain(hat, cmp, x, y, [&](std::span<const Index> chain) {
      ++result.chains;
      bool up = true;
      for (std::size_t i = 2; i < chain.size() && up; ++i) {
        up = lookup(hat, labels, chain[i - 2], chain[i - 1]) <
             lookup(hat, labels, chain[i - 1], chain[i]);
      }
      if (up) {
        if (++increasing == 1) found.assign(chain.begin(), chain.end());
      }
      return true;
    });
    if (increasing != 1) {
      fail("EL1: " + std::to_string(increasing) + " increasing maximal chains");
      continue;
    }
    const LabeledChain built = increasing_chain(hat, x, y);
    if (built.elements != found) {
      fail("EL1: constructed increasing chain differs from the scanned one");
      continue;
    }
    const EdgeLabel& first = built.labels.front();
    for (Index z : hat.up(x)) {
      if (z == built.elements[1] || !cmp.leq(z, y)) continue;
      if (!(first < lookup(hat, labels, x, z))) {
        fail("EL2: first edge label " + first.str() + " not below " +
             lookup(hat, labels, x, z).str());
        break;
      }
    }
  }
  return result;
}

template <class Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < std::min(workers, count); ++w) {
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& t : threads) t.join();
}

}  // namespace

ELReport verify_el(int n, int l, const RunOptions& options) {
  if (n > kMaxElLength && !options.force) {
    throw guard_error("EL verification is limited to n <= " + std::to_string(kMaxElLength));
  }
  const GradedPoset hat = bounded_extension(build_poset(n, l, Family::R));
  const Comparability cmp(hat);
  const auto labels = cover_labels(hat);

  std::vector<ElementResult> per_element(hat.size());
  parallel_for(hat.size(), options.jobs, [&](std::size_t x) {
    per_element[x] = check_from(hat, cmp, labels, static_cast<Index>(x));
  });

  ELReport report;
  report.n = n;
  report.l = l;
  for (auto& r : per_element) {
    report.intervals_checked += r.intervals;
    report.chains_scanned += r.chains;
    for (std::size_t c = 0; c < 4; ++c) report.case_counts[c] += r.cases[c];
    for (auto& v : r.violations) report.violations.push_back(std::move(v));
  }
  return report;
}

std::string to_json(const ELReport& report) {
  nlohmann::ordered_json doc;
  doc["n"] = report.n;
  doc["l"] = report.l;
  doc["passed"] = report.passed();
  doc["intervals_checked"] = report.intervals_checked;
  doc["chains_scanned"] = report.chains_scanned;
  nlohmann::ordered_json cases;
  for (std::size_t c = 0; c < 4; ++c) cases[std::to_string(c + 1)] = report.case_counts[c];
  doc["cases"] = std::move(cases);
  auto violations = nlohmann::ordered_json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"x", v.x}, {"y", v.y}, {"reason", v.reason}});
  }
  doc["violations"] = std::move(violations);
  return doc.dump(2) + "\n";
}

bool atom_order_is_lex(int n, int l, const RunOptions& options) {
  if (n > kMaxElLength && !options.force) {
    throw guard_error("atom ordering check is limited to n <= " + std::to_string(kMaxElLength));
  }
  const GradedPoset hat = bounded_extension(build_poset(n, l, Family::R));
  const Index top = *hat.top();
  for (Index x = 0; x < hat.size(); ++x) {
    auto ups = hat.up(x);
    if (x == top || std::find(ups.begin(), ups.end(), top) != ups.end()) continue;
    std::vector<Index> by_label(ups.begin(), ups.end());
    std::vector<Index> by_tuple(ups.begin(), ups.end());
    std::sort(by_label.begin(), by_label.end(),
              [&](Index a, Index b) { return label_edge(hat, x, a) < label_edge(hat, x, b); });
    std::sort(by_tuple.begin(), by_tuple.end(), [&](Index a, Index b) {
      return tuple_lex_less(hat.blocks(a), hat.blocks(b));
    });
    if (by_label != by_tuple) return false;
  }
  return true;
}

}  // namespace signposet
