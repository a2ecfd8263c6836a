// Copyright 2026 The signposet Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SIGNPOSET_REPORT_HPP
#define SIGNPOSET_REPORT_HPP

#include <string>
#include <vector>

#include "signposet/enumeration.hpp"
#include "signposet/poset.hpp"
#include "signposet/shelling.hpp"

namespace signposet {

enum class VectorKind { f, h, flagf, flagh, whitney };

VectorKind parse_vector_kind(std::string_view name);
std::string vector_kind_name(VectorKind kind);

// Closed-form tables refuse n > 12 unless forced; the enumerated column is
// filled only for n <= 9 (or when forced).
inline constexpr int kMaxClosedLength = 12;
inline constexpr int kMaxBruteTableLength = 9;

struct VectorRow {
  std::string key;     // "f_0", "h_2", "{1,3}", "W_2"
  std::string brute;   // empty when not enumerated
  std::string closed;
  bool equal = false;  // false when brute is empty
};

struct VectorTable {
  int n = 0;
  int l = 0;
  VectorKind kind = VectorKind::f;
  Family family = Family::R;
  bool enumerated = false;
  std::vector<VectorRow> rows;

  /// True when the enumerated column exists and agrees on every row.
  bool all_equal() const;
};

/// Enumerated and closed-form columns side by side. The family matters only
/// for Whitney numbers; the other tables describe R_{n,l}.
VectorTable vector_table(int n, int l, VectorKind kind, Family family = Family::R,
                         const RunOptions& options = {});

std::string to_json(const VectorTable& table);
std::string to_csv(const VectorTable& table);
std::string to_text(const VectorTable& table);

std::string to_json(const LatticeReport& report, const GradedPoset& p);

/// Every maximal chain of R̂_{n,l} with edge labels and descent sets.
std::string chains_json(int n, int l, const RunOptions& options = {});
std::string chains_text(int n, int l, const RunOptions& options = {});

}  // namespace signposet

#endif  // SIGNPOSET_REPORT_HPP
