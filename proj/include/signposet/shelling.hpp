// Copyright 2026 The signposet Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SIGNPOSET_SHELLING_HPP
#define SIGNPOSET_SHELLING_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "signposet/poset.hpp"

namespace signposet {

/// An element of the label set Λ_{n,l}: either an (l+1)-subset of [n] (on
/// edges out of 0̂) or a triple (type, block, element).
///
/// Order: every α-triple < every set label < every β-triple. α-triples sort by
/// block ascending, β-triples by block descending, both then by element
/// ascending. Set labels sort lexicographically as increasing sequences.
class EdgeLabel {
 public:
  enum class Kind : std::uint8_t { alpha, set, beta };

  static EdgeLabel set_label(std::vector<int> elements);
  static EdgeLabel triple(CoverType type, int block, int element);

  Kind kind() const { return kind_; }
  int block() const { return block_; }
  int element() const { return element_; }
  const std::vector<int>& elements() const { return set_; }

  /// "{1,2}", "(a,2,2)", "(b,2,4)"
  std::string str() const;

  friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
  friend std::strong_ordering operator<=>(const EdgeLabel& a, const EdgeLabel& b);

 private:
  Kind kind_ = Kind::set;
  int block_ = 0;
  int element_ = 0;
  std::vector<int> set_;
};

inline std::strong_ordering label_compare(const EdgeLabel& a, const EdgeLabel& b) { return a <=> b; }

struct LabeledChain {
  std::vector<Index> elements;
  std::vector<EdgeLabel> labels;
  std::vector<int> descents;
};

/// Label of the cover x ⋖ y in R̂_{n,l}. Throws std::invalid_argument when y
/// does not cover x.
EdgeLabel label_edge(const GradedPoset& hat, Index x, Index y);

/// Attaches labels and descents to a saturated chain of R̂_{n,l}.
LabeledChain label_chain(const GradedPoset& hat, std::vector<Index> elements);

/// Positions i (1-based) where labels[i-1] ≻ labels[i].
std::vector<int> descent_set(std::span<const EdgeLabel> labels);
inline std::vector<int> descent_set(const LabeledChain& c) { return descent_set(c.labels); }

/// The increasing maximal chain of [x, y], built directly: α-insertions by
/// block ascending, then β-insertions by block descending, elements ascending
/// within a block. Intervals starting at 0̂ enter through the atom of block
/// minima of y; intervals ending at 1̂ leave through the complete tuple cut at
/// the block maxima of x. Throws std::invalid_argument unless x ≤ y.
LabeledChain increasing_chain(const GradedPoset& hat, Index x, Index y);

/// Which of the four interval shapes [x, y] falls under: 1 interior, 2 from 0̂,
/// 3 to 1̂, 4 the whole poset.
int interval_case(const GradedPoset& hat, Index x, Index y);

/// Calls `visit` with every maximal chain of [x, y]. Stops early when `visit`
/// returns false.
void for_each_maximal_chain(const GradedPoset& p, const Comparability& cmp, Index x, Index y,
                            const std::function<bool(std::span<const Index>)>& visit);

struct RunOptions {
  bool force = false;  // lift exhaustive-scale guards
  int jobs = 1;
};

struct ELViolation {
  std::string x;
  std::string y;
  std::string reason;
};

struct ELReport {
  int n = 0;
  int l = 0;
  std::uint64_t intervals_checked = 0;
  std::array<std::uint64_t, 4> case_counts{};
  std::uint64_t chains_scanned = 0;
  std::vector<ELViolation> violations;

  bool passed() const { return violations.empty(); }
};

/// Checks EL1 and EL2 on every interval [x, y], x < y, of R̂_{n,l} by scanning
/// all maximal chains. Refuses n > 7 unless forced.
ELReport verify_el(int n, int l, const RunOptions& options = {});

std::string to_json(const ELReport& report);

/// True when, for every x of R̂_{n,l} not covered by 1̂, ordering the upper
/// covers of x by edge label agrees with ordering them lexicographically.
bool atom_order_is_lex(int n, int l, const RunOptions& options = {});

}  // namespace signposet

#endif  // SIGNPOSET_SHELLING_HPP
