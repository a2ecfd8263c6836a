// Copyright 2026 The signposet Authors
// SPDX-License-Identifier: Apache-2.0

#include "signposet/report.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"

#include "signposet/sperner.hpp"

namespace signposet {

namespace {

constexpr int kMaxChainDumpLength = 7;

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::vector<BigInt> padded(const IntPolynomial& p, std::size_t length) {
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < length; ++i) out.push_back(p.coefficient(i));
  return out;
}

void fill_column(VectorTable& table, const std::vector<std::string>& keys,
                 const std::vector<BigInt>& closed, const std::vector<BigInt>* brute) {
  for (std::size_t i = 0; i < keys.size(); ++i) {
    VectorRow row;
    row.key = keys[i];
    row.closed = closed[i].get_str();
    if (brute) {
      row.brute = (*brute)[i].get_str();
      row.equal = (*brute)[i] == closed[i];
    }
    table.rows.push_back(std::move(row));
  }
}

std::vector<BigInt> flag_values(const FlagVector& v) {
  std::vector<BigInt> out;
  for (RankSet s = 0; s < v.subset_count(); ++s) out.push_back(v[s]);
  return out;
}

std::string element_text(const GradedPoset& hat, Index x) {
  return hat.has_blocks(x) ? hat.blocks(x).str() : hat.label(x);
}

void check_chain_guard(int n, const RunOptions& options) {
  if (n > kMaxChainDumpLength && !options.force) {
    throw guard_error("chain dumps are limited to n <= " + std::to_string(kMaxChainDumpLength));
  }
}

}  // namespace

VectorKind parse_vector_kind(std::string_view name) {
  const std::string s = lower(name);
  if (s == "f") return VectorKind::f;
  if (s == "h") return VectorKind::h;
  if (s == "flagf") return VectorKind::flagf;
  if (s == "flagh") return VectorKind::flagh;
  if (s == "whitney") return VectorKind::whitney;
  throw std::invalid_argument("unknown vector kind: " + std::string(name));
}

std::string vector_kind_name(VectorKind kind) {
  switch (kind) {
    case VectorKind::f: return "f";
    case VectorKind::h: return "h";
    case VectorKind::flagf: return "flagf";
    case VectorKind::flagh: return "flagh";
    case VectorKind::whitney: return "whitney";
  }
  return "?";
}

bool VectorTable::all_equal() const {
  return enumerated && std::all_of(rows.begin(), rows.end(), [](const VectorRow& r) { return r.equal; });
}

VectorTable vector_table(int n, int l, VectorKind kind, Family family, const RunOptions& options) {
  if (n < 1 || l < 0 || l >= n) throw std::invalid_argument("require 0 <= l < n");
  if (family != Family::R && family != Family::P) throw std::invalid_argument("family must be R or P");
  if (kind != VectorKind::whitney && family != Family::R) {
    throw std::invalid_argument("f/h tables are computed for R only");
  }
  if (n > kMaxClosedLength && !options.force) {
    throw guard_error("vector tables are limited to n <= " + std::to_string(kMaxClosedLength));
  }
  VectorTable table;
  table.n = n;
  table.l = l;
  table.kind = kind;
  table.family = family;
  table.enumerated = n <= kMaxBruteTableLength || options.force;
  const int d = n - l;

  std::vector<std::string> keys;
  std::vector<BigInt> closed;
  std::vector<BigInt> brute;

  if (kind == VectorKind::whitney) {
    closed = whitney(n, l, family);
    for (std::size_t r = 1; r <= closed.size(); ++r) keys.push_back("W_" + std::to_string(r));
    if (table.enumerated) {
      for (std::size_t s : build_poset(n, l, family).rank_sizes()) brute.emplace_back(static_cast<unsigned long>(s));
    }
  } else if (kind == VectorKind::flagf || kind == VectorKind::flagh) {
    FlagVector alpha = flag_f_closed_all(n, l);
    closed = flag_values(kind == VectorKind::flagf ? alpha : flag_h(alpha));
    for (RankSet s = 0; s < alpha.subset_count(); ++s) keys.push_back(subset_string(s));
    if (table.enumerated) {
      const FlagVector counted = flag_f_brute(build_poset(n, l, Family::R));
      brute = flag_values(kind == VectorKind::flagf ? counted : flag_h(counted));
    }
  } else {
    const auto length = static_cast<std::size_t>(d + 1);
    if (kind == VectorKind::f) {
      closed = padded(f_series_closed(n, l), length);
      for (int i = -1; i < d; ++i) keys.push_back("f_" + std::to_string(i));
    } else {
      closed = padded(h_series_closed(n, l), length);
      for (int i = 0; i <= d; ++i) keys.push_back("h_" + std::to_string(i));
    }
    if (table.enumerated) {
      const FHPolynomials fh = fh_from_flag(flag_f_brute(build_poset(n, l, Family::R)));
      brute = padded(kind == VectorKind::f ? fh.f : fh.h, length);
    }
  }
  fill_column(table, keys, closed, table.enumerated ? &brute : nullptr);
  return table;
}

std::string to_json(const VectorTable& table) {
  nlohmann::ordered_json doc;
  doc["n"] = table.n;
  doc["l"] = table.l;
  doc["family"] = family_name(table.family);
  doc["vector"] = vector_kind_name(table.kind);
  doc["enumerated"] = table.enumerated;
  doc["all_equal"] = table.all_equal();
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : table.rows) {
    nlohmann::ordered_json row;
    row["key"] = r.key;
    row["brute"] = table.enumerated ? nlohmann::ordered_json(r.brute) : nlohmann::ordered_json();
    row["closed"] = r.closed;
    row["equal"] = r.equal;
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string to_csv(const VectorTable& table) {
  std::ostringstream out;
  out << "n,l,vector,key,brute,closed,equal\n";
  for (const auto& r : table.rows) {
    // Keys such as {1,2} contain commas.
    out << table.n << ',' << table.l << ',' << vector_kind_name(table.kind) << ",\"" << r.key
        << "\"," << (table.enumerated ? r.brute : "-") << ',' << r.closed << ','
        << (table.enumerated ? (r.equal ? "true" : "false") : "-") << '\n';
  }
  return out.str();
}

std::string to_text(const VectorTable& table) {
  std::size_t key_w = 3, brute_w = 5, closed_w = 6;
  for (const auto& r : table.rows) {
    key_w = std::max(key_w, r.key.size());
    brute_w = std::max(brute_w, r.brute.size());
    closed_w = std::max(closed_w, r.closed.size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - std::min(w, s.size()), ' '); };
  std::ostringstream out;
  out << vector_kind_name(table.kind) << " of " << family_name(table.family) << "_{" << table.n << ','
      << table.l << "}\n";
  out << pad("key", key_w) << "  " << pad("brute", brute_w) << "  " << pad("closed", closed_w)
      << "  equal\n";
  for (const auto& r : table.rows) {
    out << pad(r.key, key_w) << "  " << pad(table.enumerated ? r.brute : "-", brute_w) << "  "
        << pad(r.closed, closed_w) << "  " << (table.enumerated ? (r.equal ? "yes" : "NO") : "-")
        << '\n';
  }
  if (table.enumerated) out << (table.all_equal() ? "all rows equal\n" : "MISMATCH\n");
  return out.str();
}

std::string to_json(const LatticeReport& report, const GradedPoset& p) {
  nlohmann::ordered_json doc;
  doc["family"] = family_name(p.family());
  doc["n"] = p.n();
  doc["l"] = p.l();
  doc["is_lattice"] = report.is_lattice;
  doc["is_distributive"] = report.is_distributive;
  if (report.non_lattice_pair) {
    doc["non_lattice_pair"] = {p.label(report.non_lattice_pair->first),
                               p.label(report.non_lattice_pair->second)};
    doc["non_lattice_reason"] = report.non_lattice_reason;
  }
  if (report.non_distributive_triple) {
    auto t = nlohmann::ordered_json::array();
    for (Index x : *report.non_distributive_triple) t.push_back(p.label(x));
    doc["non_distributive_triple"] = std::move(t);
  }
  return doc.dump(2) + "\n";
}

std::string chains_json(int n, int l, const RunOptions& options) {
  check_chain_guard(n, options);
  const GradedPoset hat = bounded_extension(build_poset(n, l, Family::R));
  nlohmann::ordered_json doc;
  doc["n"] = n;
  doc["l"] = l;
  auto chains = nlohmann::ordered_json::array();
  for_each_labeled_maximal_chain(hat, [&](const LabeledChain& c) {
    nlohmann::ordered_json row;
    auto elements = nlohmann::ordered_json::array();
    for (Index x : c.elements) elements.push_back(element_text(hat, x));
    auto labels = nlohmann::ordered_json::array();
    for (const auto& e : c.labels) labels.push_back(e.str());
    row["elements"] = std::move(elements);
    row["labels"] = std::move(labels);
    row["descents"] = c.descents;
    chains.push_back(std::move(row));
  });
  doc["count"] = chains.size();
  doc["chains"] = std::move(chains);
  return doc.dump(2) + "\n";
}

std::string chains_text(int n, int l, const RunOptions& options) {
  check_chain_guard(n, options);
  const GradedPoset hat = bounded_extension(build_poset(n, l, Family::R));
  std::ostringstream out;
  std::size_t count = 0;
  for_each_labeled_maximal_chain(hat, [&](const LabeledChain& c) {
    for (std::size_t i = 0; i < c.elements.size(); ++i) {
      if (i > 0) out << " -" << c.labels[i - 1].str() << "- ";
      out << element_text(hat, c.elements[i]);
    }
    out << "  descents {";
    for (std::size_t i = 0; i < c.descents.size(); ++i) out << (i ? "," : "") << c.descents[i];
    out << "}\n";
    ++count;
  });
  out << count << " maximal chains\n";
  return out.str();
}

}  // namespace signposet
