// Copyright 2026 The signposet Authors
// SPDX-License-Identifier: Apache-2.0

#include <map>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "signposet/sperner.hpp"

using namespace signposet;

namespace {

BlockTuple bt(int n, const std::vector<std::vector<int>>& blocks) { return BlockTuple::from_sets(n, blocks); }

std::vector<BigInt> bigs(std::vector<long> v) {
  std::vector<BigInt> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

GradedPoset chain_poset(int length) {
  std::vector<int> ranks;
  std::vector<std::pair<Index, Index>> covers;
  for (int r = 1; r <= length; ++r) ranks.push_back(r);
  for (Index i = 1; i < static_cast<Index>(length); ++i) covers.emplace_back(i - 1, i);
  return GradedPoset::from_covers(ranks, covers);
}

// Rank sizes sorted descending, summed over the j largest.
std::size_t largest(const GradedPoset& p, int j) {
  auto sizes = p.rank_sizes();
  std::sort(sizes.rbegin(), sizes.rend());
  std::size_t total = 0;
  for (int i = 0; i < j && i < static_cast<int>(sizes.size()); ++i) total += sizes[static_cast<std::size_t>(i)];
  return total;
}

oracle::Poset oracle_of(const GradedPoset& p) {
  oracle::Poset o;
  const Comparability cmp(p);
  for (Index x = 0; x < p.size(); ++x) {
    o.elements.push_back({});
    o.rank.push_back(p.rank(x));
  }
  o.le.assign(p.size(), std::vector<bool>(p.size(), false));
  for (Index x = 0; x < p.size(); ++x)
    for (Index y = 0; y < p.size(); ++y) o.le[x][y] = cmp.leq(x, y);
  return o;
}

}  // namespace

TEST_CASE("Whitney numbers") {
  CHECK(whitney(3, 1, Family::R) == bigs({3, 2}));
  CHECK(whitney(3, 1, Family::P) == bigs({3, 6, 3}));
  for (int n = 1; n <= 10; ++n) {
    const auto w = whitney(n, n - 1, Family::P);
    for (int r = 1; r <= n; ++r) {
      BigInt expected = binomial(n, r);
      expected <<= (r - 1);
      CHECK(w[r - 1] == expected);
    }
  }
  CHECK_THROWS_AS(whitney(3, 3, Family::R), std::invalid_argument);
  CHECK_THROWS_AS(whitney(3, 1, Family::R_hat), std::invalid_argument);
}

TEST_CASE("log-concavity") {
  CHECK(is_log_concave(bigs({3, 2})));
  CHECK_FALSE(is_log_concave(bigs({1, 2, 1, 2})));
  CHECK(is_log_concave(bigs({})));
  CHECK(is_log_concave(bigs({1, 4, 6, 4, 1})));
  CHECK(is_log_concave(partial_binomial_sums(3, 12)));
  CHECK(partial_binomial_sums(1, 4) == bigs({1, 2, 3, 4}));
}

TEST_CASE("flow on R_{3,1}") {
  const auto p = build_poset(3, 1, Family::R);
  const auto f = flow_R(p);
  const Index x13 = *p.find(bt(3, {{1}, {3}}));
  const Index x12 = *p.find(bt(3, {{1}, {2}}));
  REQUIRE(p.up(x13).size() == 2);
  CHECK(f.value(x13, 0) == q(1, 2));
  CHECK(f.value(x13, 1) == q(1, 2));
  CHECK(f.value_between(x12, *p.find(bt(3, {{1}, {2, 3}}))) == 1);
  CHECK_THROWS_AS(f.value_between(x12, *p.find(bt(3, {{1, 2}, {3}}))), std::invalid_argument);
}

TEST_CASE("flow on the covers of ({2,4},{6},{8}) in R_{9,2}") {
  const auto x = bt(9, {{2, 4}, {6}, {8}});
  std::map<std::string, Rational> weights;
  for (const auto& [y, info] : covers_R(x)) weights[y.str()] = block_insertion_weight(x, y);
  CHECK(weights["({1,2,4},{6},{8})"] == 1);
  CHECK(weights["({2,3,4},{6},{8})"] == 1);
  CHECK(weights["({2,4,5},{6},{8})"] == q(1, 2));
  CHECK(weights["({2,4},{5,6},{8})"] == q(1, 2));
  CHECK(weights["({2,4},{6,7},{8})"] == q(3, 4));
  CHECK(weights["({2,4},{6},{7,8})"] == q(1, 4));
  CHECK(weights["({2,4},{6},{8,9})"] == 1);
  // The seven weights read in the lexicographic order of the covers.
  std::vector<std::pair<BlockTuple, Rational>> ordered;
  for (const auto& [y, info] : covers_R(x)) ordered.emplace_back(y, block_insertion_weight(x, y));
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return tuple_lex_less(a.first, b.first); });
  std::vector<Rational> seq;
  for (const auto& [y, w] : ordered) seq.push_back(w);
  CHECK(seq == std::vector<Rational>{1, 1, q(1, 2), q(1, 4), 1, q(3, 4), q(1, 2)});
  CHECK_THROWS_AS(block_insertion_weight(x, x), std::invalid_argument);
}

TEST_CASE("flow on R_{n,0} is constant 1") {
  for (int n = 1; n <= 6; ++n) {
    const auto p = build_poset(n, 0, Family::R);
    const auto f = flow_R(p);
    for (Index x = 0; x < p.size(); ++x)
      for (std::size_t k = 0; k < p.up(x).size(); ++k) CHECK(f.value(x, k) == 1);
  }
}

TEST_CASE("flows on P") {
  for (int n = 2; n <= 6; ++n) {
    const auto p = build_poset(n, n - 1, Family::P);
    const auto f = flow_P(p);
    for (Index x = 0; x < p.size(); ++x)
      for (std::size_t k = 0; k < p.up(x).size(); ++k) CHECK(f.value(x, k) == 1);
  }
  const auto p31 = build_poset(3, 1, Family::P);
  const auto f = flow_P(p31);
  const Index x = *p31.find(SignVector::parse("0+0"));
  CHECK(f.value_between(x, *p31.find(SignVector::parse("++0"))) == q(1, 2));
  CHECK(f.value_between(x, *p31.find(SignVector::parse("0++"))) == q(1, 2));
  const auto report = verify_flow(f);
  CHECK(report.passed());
  for (const auto& s : report.ranks) {
    if (s.up) CHECK(*s.up == 3 - s.rank);
    if (s.down) CHECK(*s.down == s.rank - 1);
  }
  CHECK_THROWS_AS(flow_P(build_poset(5, 2, Family::P)), std::invalid_argument);
  CHECK_THROWS_AS(flow_P(build_poset(3, 1, Family::R)), std::invalid_argument);
  CHECK_THROWS_AS(flow_R(p31), std::invalid_argument);
}

TEST_CASE("verify_flow reports") {
  const auto r31 = verify_flow(flow_R(build_poset(3, 1, Family::R)));
  CHECK(r31.passed());
  REQUIRE(r31.ranks.size() == 2);
  CHECK(*r31.ranks[0].up == 1);
  CHECK_FALSE(r31.ranks[0].down.has_value());
  CHECK(*r31.ranks[1].down == q(3, 2));
  CHECK_FALSE(r31.ranks[1].up.has_value());

  CHECK(verify_flow(constant_flow(build_poset(3, 2, Family::P))).passed());

  // Rank-1 up-degrees of R_{3,1} are 1, 2, 1, so the constant flow breaks NF1.
  const auto bad = verify_flow(constant_flow(build_poset(3, 1, Family::R)));
  CHECK_FALSE(bad.passed());
  REQUIRE_FALSE(bad.violations.empty());
  CHECK(bad.violations.front().condition == "NF1");
  CHECK(bad.violations.front().rank == 1);
  bool nf2 = false;
  for (const auto& v : bad.violations) nf2 = nf2 || v.condition == "NF2";
  CHECK_FALSE(nf2);

  const auto negative = verify_flow(constant_flow(build_poset(3, 2, Family::P), -1));
  bool flagged = false;
  for (const auto& v : negative.violations) flagged = flagged || v.condition == "negative";
  CHECK(flagged);

  const auto doc = nlohmann::json::parse(to_json(r31));
  CHECK(doc["passed"] == true);
  CHECK(doc["ranks"][1]["down"] == "3/2");
  CHECK(doc["ranks"][0]["down"].is_null());

  const auto edges = nlohmann::json::parse(flow_to_json(flow_R(build_poset(3, 1, Family::R))));
  CHECK(edges["edges"].size() == 4);
  bool half = false;
  for (const auto& e : edges["edges"]) half = half || e["value"] == "1/2";
  CHECK(half);
  CHECK(fraction_string(q(6, 4)) == "3/2");
  CHECK(fraction_string(q(4, 2)) == "2");
}

TEST_CASE("maximum antichains") {
  const auto r31 = build_poset(3, 1, Family::R);
  const auto a = max_antichain(r31);
  CHECK(a.antichain.size() == 3);
  CHECK(check_certificate(r31, a));

  const auto p31 = build_poset(3, 1, Family::P);
  const auto b = max_antichain(p31);
  CHECK(b.antichain.size() == 6);
  CHECK(check_certificate(p31, b));

  const auto c5 = chain_poset(5);
  const auto c = max_antichain(c5);
  CHECK(c.antichain.size() == 1);
  CHECK(c.chain_cover.size() == 1);

  AntichainCertificate broken = a;
  broken.antichain.push_back(broken.chain_cover.front().front());
  CHECK_FALSE(check_certificate(r31, broken));
}

TEST_CASE("unions of antichains") {
  const auto r31 = build_poset(3, 1, Family::R);
  CHECK(max_union_antichains(r31, 1).value == 3);
  CHECK(max_union_antichains(r31, 2).value == 5);
  CHECK(max_union_antichains(r31, 7).value == r31.size());
  CHECK(max_union_antichains_brute(r31, 2) == 5);

  const auto c5 = chain_poset(5);
  for (int j = 1; j <= 7; ++j) CHECK(max_union_antichains(c5, j).value == static_cast<std::size_t>(std::min(j, 5)));

  const auto r51 = build_poset(5, 1, Family::R);
  for (int j = 1; j <= 5; ++j) CHECK(max_union_antichains(r51, j).value == largest(r51, j));

  const auto cert = max_union_antichains(build_poset(4, 1, Family::R), 2);
  CHECK(chain_partition_bound(build_poset(4, 1, Family::R), cert.chain_partition, 2) == cert.value);
  CHECK_FALSE(chain_partition_bound(r31, {{0, 1}}, 1).has_value());

  CHECK_THROWS_AS(max_union_antichains(r31, 0), std::invalid_argument);
  CHECK_THROWS_AS(max_union_antichains_brute(build_poset(4, 2, Family::P), 1), guard_error);
}

TEST_CASE("Sperner verdicts") {
  for (int n = 1; n <= 6; ++n)
    for (int l = 0; l < n; ++l) CHECK(is_strongly_sperner(build_poset(n, l, Family::R)).holds);
  for (int n = 1; n <= 6; ++n)
    for (int l = 0; l < n; ++l) CHECK(is_sperner(build_poset(n, l, Family::P)).holds);
  const auto two_chains = GradedPoset::from_covers({1, 1, 2, 2}, {{0, 2}, {1, 3}});
  CHECK(is_sperner(two_chains).holds);

  // Two tops over one bottom plus an isolated bottom: {tops, isolated} beats both ranks.
  const auto skew = GradedPoset::from_covers({1, 2, 2, 1}, {{0, 1}, {0, 2}});
  const auto v = is_sperner(skew);
  CHECK_FALSE(v.holds);
  CHECK(v.levels.front().max_union == 3);
}

TEST_CASE("rank-pair normalized matching") {
  CHECK(lym_rank_pair_check(build_poset(3, 1, Family::R), 1));
  CHECK(lym_rank_pair_check(build_poset(3, 1, Family::P), 1));
  CHECK(lym_rank_pair_check(build_poset(3, 1, Family::P), 2));
  const auto lopsided = GradedPoset::from_covers({1, 1, 2}, {{0, 2}});
  CHECK_FALSE(lym_rank_pair_check(lopsided, 1));
  CHECK_THROWS_AS(lym_rank_pair_check(build_poset(3, 1, Family::R), 2), std::invalid_argument);
}

TEST_CASE("Sperner sweep") {
  const auto t3 = sperner_sweep(3);
  CHECK(t3.all_pass());
  REQUIRE(t3.rows.size() == 6);
  const auto& p31 = t3.rows[4];
  CHECK(p31.n == 3);
  CHECK(p31.l == 1);
  CHECK(p31.max_antichain == 6);
  CHECK(p31.max_whitney == 6);
  CHECK(p31.sperner);

  const auto t1 = sperner_sweep(1);
  REQUIRE(t1.rows.size() == 1);
  CHECK(t1.rows[0].size == 1);

  for (const auto& row : sperner_sweep(6).rows) {
    if (row.l == 0) CHECK(BigInt(static_cast<unsigned long>(row.max_whitney)) == binomial(row.n, (row.n + 1) / 2));
  }

  RunOptions jobs;
  jobs.jobs = 4;
  CHECK(to_csv(sperner_sweep(5, jobs)) == to_csv(sperner_sweep(5)));
  CHECK(to_csv(t1) == "n,l,size,max_antichain,max_W,verdict\n1,0,1,1,1,pass\n");
  CHECK_THROWS_AS(sperner_sweep(10), guard_error);
  CHECK_THROWS_AS(sperner_sweep(0), std::invalid_argument);
}

// Exhaustive properties.

TEST_CASE("flow_R has the predicted rank sums, l < n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for (int l = 0; l < n; ++l) {
      const auto p = build_poset(n, l, Family::R);
      const auto report = verify_flow(flow_R(p));
      CHECK(report.passed());
      for (const auto& s : report.ranks) {
        const int r = s.rank;
        if (r < n - l) CHECK(*s.up == n - l - r);
        if (r > 1) CHECK(*s.down == q((r - 1) * (l + r), l + r - 1));
      }
    }
  }
}

TEST_CASE("flow_P passes for l in {0, 1, n-1}, n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for (int l : {0, 1, n - 1}) {
      if (l < 0 || l >= n) continue;
      const auto report = verify_flow(flow_P(build_poset(n, l, Family::P)));
      CHECK(report.passed());
      if (l == 1 && n > 2) {
        for (const auto& s : report.ranks) {
          if (s.up) CHECK(*s.up == n - s.rank);
          if (s.down) CHECK(*s.down == s.rank - 1);
        }
      }
    }
  }
}

TEST_CASE("weights over the receiving blocks of one element sum to 1, n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for (int l = 0; l < n; ++l) {
      const auto p = build_poset(n, l, Family::R);
      const auto f = flow_R(p);
      for (Index x = 0; x < p.size(); ++x) {
        std::map<BlockMask, Rational> per_element;
        auto ups = p.up(x);
        for (std::size_t k = 0; k < ups.size(); ++k) {
          const BlockMask added = p.blocks(ups[k]).support() & ~p.blocks(x).support();
          per_element[added] += f.value(x, k);
          CHECK(f.value(x, k) > 0);
        }
        for (const auto& [a, total] : per_element) CHECK(total == 1);
      }
    }
  }
}

TEST_CASE("Whitney sequences are log-concave, n <= 12") {
  for (int n = 1; n <= 12; ++n)
    for (int l = 0; l < n; ++l) {
      CHECK(is_log_concave(whitney(n, l, Family::R)));
      CHECK(is_log_concave(whitney(n, l, Family::P)));
    }
  for (int l = 0; l <= 5; ++l) CHECK(is_log_concave(partial_binomial_sums(l, 20)));
}

TEST_CASE("Dilworth certificates on every small poset") {
  for (int n = 1; n <= 6; ++n)
    for (int l = 0; l < n; ++l)
      for (Family f : {Family::R, Family::P}) {
        const auto p = build_poset(n, l, f);
        const auto cert = max_antichain(p);
        CHECK(check_certificate(p, cert));
        if (p.size() <= 15) CHECK(cert.antichain.size() == oracle::max_union_antichains(oracle_of(p), 1));
      }
}

TEST_CASE("Greene-Kleitman values equal brute force for posets with at most 15 elements") {
  std::size_t compared = 0;
  for (int n = 1; n <= 6; ++n)
    for (int l = 0; l < n; ++l)
      for (Family f : {Family::R, Family::P}) {
        const auto p = build_poset(n, l, f);
        if (p.size() > 15) continue;
        const auto o = oracle_of(p);
        for (int j = 1; j <= p.max_rank() + 1; ++j) {
          const auto cert = max_union_antichains(p, j);
          CHECK(cert.value == oracle::max_union_antichains(o, j));
          CHECK(cert.value == max_union_antichains_brute(p, j));
          CHECK(chain_partition_bound(p, cert.chain_partition, j) == cert.value);
          ++compared;
        }
      }
  CHECK(compared > 20);
}

TEST_CASE("R_{n,l} is strongly Sperner, n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (int l = 0; l < n; ++l) {
      const auto p = build_poset(n, l, Family::R);
      const auto v = is_strongly_sperner(p);
      CHECK(v.holds);
      for (const auto& level : v.levels) CHECK(level.max_union == largest(p, level.j));
    }
}

TEST_CASE("rank pairs of R admit normalized matchings, n <= 7") {
  for (int n = 2; n <= 7; ++n)
    for (int l = 0; l < n - 1; ++l) {
      const auto p = build_poset(n, l, Family::R);
      for (int r = 1; r < n - l; ++r) CHECK(lym_rank_pair_check(p, r));
    }
}
