// Copyright 2026 The signposet Authors
// SPDX-License-Identifier: Apache-2.0

#include "signposet/sperner.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "signposet/optimize.hpp"

namespace signposet {

namespace {
constexpr int kMaxSweepLength = 9;
constexpr std::size_t kMaxBruteUnion = 20;
}  // namespace

std::string fraction_string(const Rational& q) { return q.get_str(); }

std::vector<BigInt> whitney(int n, int l, Family family) {
  if (n < 1 || l < 0 || l >= n) throw std::invalid_argument("require 0 <= l < n");
  std::vector<BigInt> w;
  if (family == Family::R) {
    for (int r = 1; r <= n - l; ++r) w.push_back(binomial(l + r - 1, l) * binomial(n, l + r));
  } else if (family == Family::P) {
    for (int r = 1; r <= n; ++r) {
      BigInt partial = 0;
      for (int i = 0; i <= l; ++i) partial += binomial(r - 1, i);
      w.push_back(binomial(n, r) * partial);
    }
  } else {
    throw std::invalid_argument("whitney numbers are tabulated for R and P");
  }
  return w;
}

bool is_log_concave(std::span<const BigInt> s) {
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i - 1] * s[i + 1] > s[i] * s[i]) return false;
  }
  return true;
}

std::vector<BigInt> partial_binomial_sums(int l, int r_max) {
  std::vector<BigInt> out;
  for (int r = 1; r <= r_max; ++r) {
    BigInt total = 0;
    for (int i = 0; i <= l; ++i) total += binomial(r - 1, i);
    out.push_back(total);
  }
  return out;
}

RationalFlow::RationalFlow(const GradedPoset& poset) : poset_(&poset), values_(poset.size()) {
  for (Index x = 0; x < poset.size(); ++x) values_[x].assign(poset.up(x).size(), Rational(0));
}

Rational RationalFlow::value_between(Index x, Index y) const {
  auto ups = poset_->up(x);
  auto it = std::lower_bound(ups.begin(), ups.end(), y);
  if (it == ups.end() || *it != y) throw std::invalid_argument("not a cover edge");
  return values_[x][static_cast<std::size_t>(it - ups.begin())];
}

Rational block_insertion_weight(const BlockTuple& x, const BlockTuple& y) {
  for (int i = 0; i < x.block_count(); ++i) {
    const BlockMask added = y.block(i) & ~x.block(i);
    if (added == 0) continue;
    const int a = std::countr_zero(added) + 1;
    const int total = x.support_size();
    if (a > x.block_max(i) && i + 1 < x.block_count()) {
      // a could also open the next block: lower block takes the prefix share.
      int prefix = 0;
      for (int k = 0; k <= i; ++k) prefix += std::popcount(x.block(k));
      Rational w(prefix, total);
      w.canonicalize();
      return w;
    }
    if (a < x.block_min(i) && i > 0) {
      int suffix = 0;
      for (int k = i; k < x.block_count(); ++k) suffix += std::popcount(x.block(k));
      Rational w(suffix, total);
      w.canonicalize();
      return w;
    }
    return 1;
  }
  throw std::invalid_argument("block_insertion_weight: y does not cover x");
}

RationalFlow flow_R(const GradedPoset& r_poset) {
  if (r_poset.family() != Family::R) throw std::invalid_argument("flow_R needs the poset R_{n,l}");
  RationalFlow flow(r_poset);
  for (Index x = 0; x < r_poset.size(); ++x) {
    auto ups = r_poset.up(x);
    for (std::size_t k = 0; k < ups.size(); ++k) {
      Rational w = block_insertion_weight(r_poset.blocks(x), r_poset.blocks(ups[k]));
      w.canonicalize();
      flow.set(x, k, std::move(w));
    }
  }
  return flow;
}

RationalFlow constant_flow(const GradedPoset& poset, const Rational& value) {
  RationalFlow flow(poset);
  for (Index x = 0; x < poset.size(); ++x) {
    for (std::size_t k = 0; k < poset.up(x).size(); ++k) flow.set(x, k, value);
  }
  return flow;
}

RationalFlow flow_P(const GradedPoset& p_poset) {
  if (p_poset.family() != Family::P) throw std::invalid_argument("flow_P needs the poset P_{n,l}");
  const int n = p_poset.n();
  const int l = p_poset.l();
  RationalFlow flow(p_poset);
  if (l == 0) {
    for (Index x = 0; x < p_poset.size(); ++x) {
      auto ups = p_poset.up(x);
      for (std::size_t k = 0; k < ups.size(); ++k) {
        flow.set(x, k,
                 block_insertion_weight(to_block_tuple(p_poset.sign(x)),
                                        to_block_tuple(p_poset.sign(ups[k]))));
      }
    }
    return flow;
  }
  if (l == n - 1) return constant_flow(p_poset, 1);
  if (l != 1) throw std::invalid_argument("flow_P is constructed for l in {0, 1, n-1} only");
  // Split evenly between the covers that fill the same zero entry.
  for (Index x = 0; x < p_poset.size(); ++x) {
    auto ups = p_poset.up(x);
    const auto support = p_poset.sign(x).support_mask();
    std::vector<BlockMask> filled(ups.size());
    for (std::size_t k = 0; k < ups.size(); ++k) {
      filled[k] = p_poset.sign(ups[k]).support_mask() & ~support;
    }
    for (std::size_t k = 0; k < ups.size(); ++k) {
      const auto same = std::count(filled.begin(), filled.end(), filled[k]);
      flow.set(x, k, Rational(1, static_cast<long>(same)));
    }
  }
  return flow;
}

FlowReport verify_flow(const RationalFlow& flow) {
  const GradedPoset& p = flow.poset();
  FlowReport report;
  std::vector<Rational> up_sum(p.size(), Rational(0));
  std::vector<Rational> down_sum(p.size(), Rational(0));
  for (Index x = 0; x < p.size(); ++x) {
    auto ups = p.up(x);
    for (std::size_t k = 0; k < ups.size(); ++k) {
      const Rational& v = flow.value(x, k);
      if (v < 0) {
        report.violations.push_back({"negative", p.rank(x), p.label(x), p.label(ups[k]),
                                     fraction_string(v)});
      }
      up_sum[x] += v;
      down_sum[ups[k]] += v;
    }
  }
  const bool check_r = p.family() == Family::R;
  const int n = p.n();
  const int l = p.l();

  auto common = [&](const std::vector<Rational>& sums, const std::vector<Index>& elements,
                    const char* condition, int rank) -> std::optional<Rational> {
    const Index first = elements.front();
    for (Index x : elements) {
      if (sums[x] != sums[first]) {
        report.violations.push_back({condition, rank, p.label(first), p.label(x),
                                     fraction_string(sums[first]) + " vs " +
                                         fraction_string(sums[x])});
        return std::nullopt;
      }
    }
    if (sums[first] <= 0) {
      report.violations.push_back(
          {condition, rank, p.label(first), "", "sum " + fraction_string(sums[first]) + " not positive"});
      return std::nullopt;
    }
    return sums[first];
  };

  for (int r = p.min_rank(); r <= p.max_rank(); ++r) {
    const auto elements = p.elements_of_rank(r);
    if (elements.empty()) continue;
    RankFlowSums sums;
    sums.rank = r;
    if (r < p.max_rank()) sums.up = common(up_sum, elements, "NF1", r);
    if (r > p.min_rank()) sums.down = common(down_sum, elements, "NF2", r);
    if (check_r && sums.up && *sums.up != Rational(n - l - r)) {
      report.violations.push_back({"expected-up", r, "", "",
                                   "up-sum " + fraction_string(*sums.up) + ", expected " +
                                       std::to_string(n - l - r)});
    }
    if (check_r && sums.down) {
      const int below = r - 1;
      Rational expected(below * (l + below + 1), l + below);
      expected.canonicalize();
      if (*sums.down != expected) {
        report.violations.push_back({"expected-down", r, "", "",
                                     "down-sum " + fraction_string(*sums.down) + ", expected " +
                                         fraction_string(expected)});
      }
    }
    report.ranks.push_back(std::move(sums));
  }
  return report;
}

std::string to_json(const FlowReport& report) {
  nlohmann::ordered_json doc;
  doc["passed"] = report.passed();
  auto ranks = nlohmann::ordered_json::array();
  for (const auto& r : report.ranks) {
    nlohmann::ordered_json row;
    row["rank"] = r.rank;
    row["up"] = r.up ? nlohmann::ordered_json(fraction_string(*r.up)) : nlohmann::ordered_json();
    row["down"] =
        r.down ? nlohmann::ordered_json(fraction_string(*r.down)) : nlohmann::ordered_json();
    ranks.push_back(std::move(row));
  }
  doc["ranks"] = std::move(ranks);
  auto violations = nlohmann::ordered_json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"condition", v.condition},
                          {"rank", v.rank},
                          {"first", v.first},
                          {"second", v.second},
                          {"detail", v.detail}});
  }
  doc["violations"] = std::move(violations);
  return doc.dump(2) + "\n";
}

std::string flow_to_json(const RationalFlow& flow) {
  const GradedPoset& p = flow.poset();
  nlohmann::ordered_json doc;
  doc["family"] = family_name(p.family());
  doc["n"] = p.n();
  doc["l"] = p.l();
  auto edges = nlohmann::ordered_json::array();
  for (Index x = 0; x < p.size(); ++x) {
    auto ups = p.up(x);
    for (std::size_t k = 0; k < ups.size(); ++k) {
      edges.push_back(
          {{"from", p.label(x)}, {"to", p.label(ups[k])}, {"value", fraction_string(flow.value(x, k))}});
    }
  }
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

namespace {

std::vector<std::vector<int>> strict_order_adjacency(const GradedPoset& p, const Comparability& cmp) {
  std::vector<std::vector<int>> adjacency(p.size());
  for (Index x = 0; x < p.size(); ++x) {
    for (Index y : cmp.above_list(x)) adjacency[x].push_back(static_cast<int>(y));
  }
  return adjacency;
}

bool is_chain(const Comparability& cmp, std::vector<Index> chain, const GradedPoset& p) {
  std::sort(chain.begin(), chain.end(), [&](Index a, Index b) { return p.rank(a) < p.rank(b); });
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (!cmp.less(chain[i - 1], chain[i])) return false;
  }
  return true;
}

bool is_partition(const GradedPoset& p, const std::vector<std::vector<Index>>& parts) {
  std::vector<int> seen(p.size(), 0);
  for (const auto& part : parts) {
    if (part.empty()) return false;
    for (Index x : part) {
      if (x >= p.size() || seen[x]++ > 0) return false;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

}  // namespace

AntichainCertificate max_antichain(const GradedPoset& p) {
  const Comparability cmp(p);
  const auto adjacency = strict_order_adjacency(p, cmp);
  const auto size = static_cast<int>(p.size());
  const opt::Matching matching = opt::hopcroft_karp(size, adjacency);
  const opt::AlternatingReach reach = opt::alternating_reach(adjacency, matching);

  AntichainCertificate cert;
  for (int x = 0; x < size; ++x) {
    if (reach.left[x] && !reach.right[x]) cert.antichain.push_back(static_cast<Index>(x));
    if (matching.right_to_left[x] != opt::kUnmatched) continue;
    std::vector<Index> chain;
    for (int v = x; v != opt::kUnmatched; v = matching.left_to_right[v]) {
      chain.push_back(static_cast<Index>(v));
    }
    cert.chain_cover.push_back(std::move(chain));
  }
  if (cert.antichain.size() != cert.chain_cover.size()) {
    throw std::logic_error("Dilworth certificate sizes disagree");
  }
  return cert;
}

bool check_certificate(const GradedPoset& p, const AntichainCertificate& cert) {
  const Comparability cmp(p);
  for (std::size_t i = 0; i < cert.antichain.size(); ++i) {
    for (std::size_t k = i + 1; k < cert.antichain.size(); ++k) {
      if (cmp.comparable(cert.antichain[i], cert.antichain[k])) return false;
    }
  }
  if (!is_partition(p, cert.chain_cover)) return false;
  for (const auto& chain : cert.chain_cover) {
    if (!is_chain(cmp, chain, p)) return false;
  }
  return cert.antichain.size() == cert.chain_cover.size();
}

std::optional<std::size_t> chain_partition_bound(const GradedPoset& p,
                                                 const std::vector<std::vector<Index>>& chains,
                                                 int j) {
  if (!is_partition(p, chains)) return std::nullopt;
  const Comparability cmp(p);
  std::size_t total = 0;
  for (const auto& chain : chains) {
    if (!is_chain(cmp, chain, p)) return std::nullopt;
    total += std::min(chain.size(), static_cast<std::size_t>(j));
  }
  return total;
}

UnionCertificate max_union_antichains(const GradedPoset& p, int j) {
  if (j < 1) throw std::invalid_argument("j must be at least 1");
  const Comparability cmp(p);
  const int size = static_cast<int>(p.size());
  // A unit of flow is a chain: it pays j up front and earns 1 per element.
  const int source = 0;
  const int sink = 1;
  auto in = [](int x) { return 2 + 2 * x; };
  auto out = [](int x) { return 3 + 2 * x; };
  opt::MinCostFlow network(2 + 2 * size);
  std::vector<int> start_edge(static_cast<std::size_t>(size));
  std::vector<std::vector<std::pair<int, int>>> step_edges(static_cast<std::size_t>(size));
  for (int x = 0; x < size; ++x) {
    start_edge[x] = network.add_edge(source, in(x), 1, j);
    network.add_edge(in(x), out(x), 1, -1);
    network.add_edge(out(x), sink, 1, 0);
    for (Index y : cmp.above_list(static_cast<Index>(x))) {
      const int id = network.add_edge(out(x), in(static_cast<int>(y)), 1, 0);
      step_edges[x].emplace_back(static_cast<int>(y), id);
    }
  }
  const std::int64_t cost = network.run_while_cheaper(source, sink, 0);

  UnionCertificate cert;
  cert.j = j;
  cert.value = static_cast<std::size_t>(size + cost);
  std::vector<bool> used(static_cast<std::size_t>(size), false);
  for (int x = 0; x < size; ++x) {
    if (network.flow_on(start_edge[x]) == 0) continue;
    std::vector<Index> chain;
    for (int v = x; v >= 0;) {
      chain.push_back(static_cast<Index>(v));
      used[v] = true;
      int next = -1;
      for (auto [y, id] : step_edges[v]) {
        if (network.flow_on(id) > 0) {
          next = y;
          break;
        }
      }
      v = next;
    }
    cert.chain_partition.push_back(std::move(chain));
  }
  for (int x = 0; x < size; ++x) {
    if (!used[x]) cert.chain_partition.push_back({static_cast<Index>(x)});
  }
  const auto bound = chain_partition_bound(p, cert.chain_partition, j);
  if (!bound || *bound != cert.value) {
    throw std::logic_error("Greene-Kleitman chain partition does not certify the flow value");
  }
  return cert;
}

std::size_t max_union_antichains_brute(const GradedPoset& p, int j) {
  if (j < 1) throw std::invalid_argument("j must be at least 1");
  const std::size_t size = p.size();
  if (size > kMaxBruteUnion) throw guard_error("brute-force union search is limited to 20 elements");
  const Comparability cmp(p);
  std::vector<Index> order(size);
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return p.rank(a) < p.rank(b); });
  std::vector<std::uint32_t> below(size, 0);
  for (Index x = 0; x < size; ++x) {
    for (Index y = 0; y < size; ++y) {
      if (cmp.less(y, x)) below[x] |= std::uint32_t{1} << y;
    }
  }
  std::size_t best = 0;
  std::vector<int> height(size);
  // A subset is a union of j antichains iff its longest chain has <= j elements.
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << size); ++mask) {
    const auto count = static_cast<std::size_t>(std::popcount(mask));
    if (count <= best) continue;
    int longest = 0;
    for (Index x : order) {
      if (!(mask & (std::uint32_t{1} << x))) continue;
      int h = 1;
      for (std::uint32_t m = below[x] & mask; m != 0; m &= m - 1) {
        h = std::max(h, height[static_cast<std::size_t>(std::countr_zero(m))] + 1);
      }
      height[x] = h;
      longest = std::max(longest, h);
      if (longest > j) break;
    }
    if (longest <= j) best = count;
  }
  return best;
}

namespace {

std::size_t largest_ranks_sum(const GradedPoset& p, int j) {
  auto sizes = p.rank_sizes();
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  std::size_t total = 0;
  for (std::size_t i = 0; i < sizes.size() && i < static_cast<std::size_t>(j); ++i) total += sizes[i];
  return total;
}

}  // namespace

SpernerVerdict is_sperner(const GradedPoset& p) {
  SpernerVerdict verdict;
  SpernerLevel level;
  level.j = 1;
  level.max_union = max_antichain(p).antichain.size();
  level.largest_ranks = largest_ranks_sum(p, 1);
  level.holds = level.max_union == level.largest_ranks;
  verdict.holds = level.holds;
  verdict.levels.push_back(level);
  return verdict;
}

SpernerVerdict is_strongly_sperner(const GradedPoset& p) {
  SpernerVerdict verdict;
  verdict.holds = true;
  const int ranks = static_cast<int>(p.rank_sizes().size());
  for (int j = 1; j <= std::max(1, ranks); ++j) {
    SpernerLevel level;
    level.j = j;
    level.max_union = max_union_antichains(p, j).value;
    level.largest_ranks = largest_ranks_sum(p, j);
    level.holds = level.max_union == level.largest_ranks;
    verdict.holds = verdict.holds && level.holds;
    verdict.levels.push_back(level);
  }
  return verdict;
}

bool lym_rank_pair_check(const GradedPoset& p, int r) {
  if (r < p.min_rank() || r + 1 > p.max_rank()) {
    throw std::invalid_argument("rank pair (r, r+1) outside the poset");
  }
  const auto lower = p.elements_of_rank(r);
  const auto upper = p.elements_of_rank(r + 1);
  const auto w_lower = static_cast<std::int64_t>(lower.size());
  const auto w_upper = static_cast<std::int64_t>(upper.size());
  const std::int64_t target = w_lower * w_upper;

  std::vector<int> node(p.size(), -1);
  int next = 2;
  for (Index x : lower) node[x] = next++;
  for (Index y : upper) node[y] = next++;
  opt::MaxFlow network(next);
  for (Index x : lower) {
    network.add_edge(0, node[x], w_upper);
    for (Index y : p.up(x)) network.add_edge(node[x], node[y], target);
  }
  for (Index y : upper) network.add_edge(node[y], 1, w_lower);
  return network.run(0, 1) == target;
}

bool SweepTable::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.sperner; });
}

SweepTable sperner_sweep(int n_max, const RunOptions& options) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  if (n_max > kMaxSweepLength && !options.force) {
    throw guard_error("the Sperner sweep is limited to n <= " + std::to_string(kMaxSweepLength));
  }
  SweepTable table;
  for (int n = 1; n <= n_max; ++n) {
    for (int l = 0; l < n; ++l) table.rows.push_back({n, l});
  }
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < table.rows.size(); i = next++) {
      SweepRow& row = table.rows[i];
      const GradedPoset p = build_poset(row.n, row.l, Family::P);
      const auto sizes = p.rank_sizes();
      row.size = p.size();
      row.max_antichain = max_antichain(p).antichain.size();
      row.max_whitney = *std::max_element(sizes.begin(), sizes.end());
      row.sperner = row.max_antichain == row.max_whitney;
    }
  };
  const int jobs = std::max(1, options.jobs);
  std::vector<std::thread> threads;
  for (int w = 1; w < jobs; ++w) threads.emplace_back(work);
  work();
  for (auto& t : threads) t.join();
  return table;
}

std::string to_csv(const SweepTable& table) {
  std::ostringstream out;
  out << "n,l,size,max_antichain,max_W,verdict\n";
  for (const auto& r : table.rows) {
    out << r.n << ',' << r.l << ',' << r.size << ',' << r.max_antichain << ',' << r.max_whitney
        << ',' << (r.sperner ? "pass" : "fail") << '\n';
  }
  return out.str();
}

}  // namespace signposet
