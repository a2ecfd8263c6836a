// Copyright 2026 The signposet Authors
// SPDX-License-Identifier: Apache-2.0

#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "signposet/enumeration.hpp"
#include "signposet/sperner.hpp"

using namespace signposet;

namespace {

BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

IntPolynomial poly(std::vector<long> c) {
  std::vector<BigInt> out;
  for (long v : c) out.emplace_back(v);
  return IntPolynomial(out);
}

GradedPoset chain_poset(int length) {
  std::vector<int> ranks;
  std::vector<std::pair<Index, Index>> covers;
  for (int r = 1; r <= length; ++r) ranks.push_back(r);
  for (Index i = 1; i < static_cast<Index>(length); ++i) covers.emplace_back(i - 1, i);
  return GradedPoset::from_covers(ranks, covers);
}

}  // namespace

TEST_CASE("flag f-vector of R_{3,1} by counting chains") {
  const auto a = flag_f_brute(build_poset(3, 1, Family::R));
  CHECK(a.d() == 2);
  CHECK(a.at({}) == 1);
  CHECK(a.at({1}) == 3);
  CHECK(a.at({2}) == 2);
  CHECK(a.at({1, 2}) == 4);
}

TEST_CASE("flag f-vector of an antichain") {
  const auto a = flag_f_brute(GradedPoset::from_covers({1, 1, 1, 1}, {}));
  CHECK(a.d() == 1);
  CHECK(a.at({1}) == 4);
}

TEST_CASE("flag f-vector of R_{4,1} against the product formula and the raw order") {
  const auto a = flag_f_brute(build_poset(4, 1, Family::R));
  const auto o = oracle::sign_poset(4, 1, true);
  for (RankSet s = 0; s < a.subset_count(); ++s) {
    CHECK(a[s] == flag_f_closed(4, 1, rank_list(s)));
    CHECK(a[s] == big(oracle::chains_at(o, rank_list(s))));
  }
}

TEST_CASE("product formula") {
  CHECK(flag_f_closed(3, 1, {1, 2}) == 4);
  CHECK(flag_f_closed(3, 1, {}) == 1);
  for (int n = 2; n <= 9; ++n)
    for (int l = 0; l < n; ++l)
      for (int r = 1; r <= n - l; ++r) CHECK(flag_f_closed(n, l, {r}) == whitney(n, l, Family::R)[r - 1]);
  // Brute-forced in advance by a separate chain count over R_{9,2}.
  CHECK(flag_f_closed(9, 2, {2, 3, 5}) == 27216);
  CHECK(flag_f_brute(build_poset(9, 2, Family::R)).at({2, 3, 5}) == 27216);
  CHECK_THROWS_AS(flag_f_closed(3, 1, {3}), std::invalid_argument);
  CHECK_THROWS_AS(flag_f_closed(3, 1, {0}), std::invalid_argument);
}

TEST_CASE("flag h-vector by inversion") {
  const auto b = flag_h(flag_f_brute(build_poset(3, 1, Family::R)));
  CHECK(b.at({}) == 1);
  CHECK(b.at({1}) == 2);
  CHECK(b.at({2}) == 1);
  CHECK(b.at({1, 2}) == 0);

  const auto chain = flag_h(flag_f_brute(chain_poset(4)));
  CHECK(chain[0] == 1);
  for (RankSet s = 1; s < chain.subset_count(); ++s) CHECK(chain[s] == 0);

  const auto r52 = flag_h(flag_f_brute(build_poset(5, 2, Family::R)));
  for (RankSet s = 0; s < r52.subset_count(); ++s) CHECK(r52[s] >= 0);

  const auto alpha = flag_f_brute(build_poset(6, 2, Family::R));
  CHECK(flag_f_from_h(flag_h(alpha)) == alpha);
}

TEST_CASE("flag h-vector from descent sets") {
  const auto b = flag_h_descents(3, 1);
  CHECK(b.at({1}) == 2);
  CHECK(b == flag_h(flag_f_brute(build_poset(3, 1, Family::R))));

  for (int n = 1; n <= 6; ++n) {
    const auto single = flag_h_descents(n, n - 1);
    CHECK(single.at({}) == 1);
    for (RankSet s = 1; s < single.subset_count(); ++s) CHECK(single[s] == 0);
  }
  CHECK(flag_h_descents(6, 2) == flag_h(flag_f_brute(build_poset(6, 2, Family::R))));
  CHECK_THROWS_AS(flag_h_descents(8, 1), guard_error);
}

TEST_CASE("f and h polynomials") {
  const auto fh = fh_from_flag(flag_f_brute(build_poset(3, 1, Family::R)));
  CHECK(fh.f == poly({1, 5, 4}));
  CHECK(fh.h == poly({1, 3}));
  CHECK(fh.f.str() == "1+5t+4t^2");

  const auto one = fh_from_flag(flag_f_brute(build_poset(1, 0, Family::R)));
  CHECK(one.f == poly({1, 1}));
  CHECK(one.h == poly({1}));

  const auto r51 = fh_from_flag(flag_f_brute(build_poset(5, 1, Family::R)));
  BigInt sum = 0;
  for (const auto& c : r51.h.coefficients()) {
    CHECK(c >= 0);
    sum += c;
  }
  CHECK(sum == r51.f.coefficient(4));
  CHECK(sum == max_chain_count(5, 1));
}

TEST_CASE("polynomial helpers") {
  CHECK(poly({1, 3, 0, 0}) == poly({1, 3}));
  CHECK_FALSE(poly({1, 3}) == poly({1, 4}));
  CHECK(poly({}).str() == "0");
  CHECK(poly({0, -2, 1}).str() == "-2t+t^2");
  CHECK(subset_string(rank_set({1, 3})) == "{1,3}");
  CHECK(subset_string(0) == "{}");
  CHECK(rank_list(rank_set({2, 5})) == std::vector<int>{2, 5});
}

TEST_CASE("maximal chain counts") {
  CHECK(max_chain_count(3, 1) == 4);
  for (int n = 1; n <= 8; ++n) CHECK(max_chain_count(n, n - 1) == 1);
  CHECK(max_chain_count(6, 2) == big(oracle::maximal_chains(oracle::sign_poset(6, 2, true))));
  CHECK(max_chain_count(6, 2) == 336);
}

TEST_CASE("chains from keys") {
  const auto c1 = chain_from_key({{1, 2, 3}, {1}}, 3, 1);
  REQUIRE(c1.size() == 2);
  CHECK(c1[0].str() == "({1},{2})");
  CHECK(c1[1].str() == "({1},{2,3})");

  const auto c2 = chain_from_key({{2, 3, 4}, {1}}, 3, 1);
  REQUIRE(c2.size() == 2);
  CHECK(c2[0].str() == "({2},{3})");
  CHECK(c2[1].str() == "({1,2},{3})");

  CHECK_THROWS_AS(chain_from_key({{1, 2}, {1}}, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(chain_from_key({{1, 2, 3}, {2}}, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(chain_from_key({{1, 2, 5}, {1}}, 3, 1), std::invalid_argument);

  const auto keys = all_chain_keys(6, 2);
  CHECK(BigInt(static_cast<unsigned long>(keys.size())) == max_chain_count(6, 2));
}

TEST_CASE("Eulerian numbers") {
  CHECK(eulerian(3, 1) == 4);
  CHECK(big(oracle::eulerian(3, 1)) == 4);
  for (int n = 1; n <= 8; ++n) CHECK(eulerian(n, 0) == 1);
  // The four witnesses 132, 213, 231, 312.
  std::set<std::string> witnesses;
  std::vector<int> perm{1, 2, 3};
  do {
    if ((perm[0] > perm[1]) + (perm[1] > perm[2]) == 1)
      witnesses.insert(std::to_string(perm[0]) + std::to_string(perm[1]) + std::to_string(perm[2]));
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(witnesses == std::set<std::string>{"132", "213", "231", "312"});

  const auto h = fh_from_flag(flag_f_brute(build_poset(5, 0, Family::R))).h;
  for (int d = 0; d <= 5; ++d) CHECK(h.coefficient(static_cast<std::size_t>(d)) == eulerian(5, d));
  CHECK(eulerian_bijection_check(4));
}

TEST_CASE("surjection identity examples") {
  CHECK(surjection_identity(3, 2) == std::pair<BigInt, BigInt>(6, 6));
  for (int d = 1; d <= 6; ++d) {
    const auto [lhs, rhs] = surjection_identity(0, d);
    CHECK(lhs == 0);
    CHECK(rhs == 0);
  }
  for (int s = 1; s <= 6; ++s) CHECK(surjection_identity(s, 1) == std::pair<BigInt, BigInt>(1, 1));
}

TEST_CASE("closed f-vector") {
  CHECK(f_d_closed(3, 1, 1) == 4);
  CHECK(f_d_closed(3, 1, 0) == 5);
  const auto f = fh_from_flag(flag_f_brute(build_poset(7, 2, Family::R))).f;
  for (int d = 0; d <= 4; ++d) CHECK(f_d_closed(7, 2, d) == f.coefficient(static_cast<std::size_t>(d + 1)));
  CHECK(f_series_closed(7, 2) == f);
}

TEST_CASE("closed h-vector") {
  CHECK(h_series_closed(3, 1) == poly({1, 3}));
  for (int n = 1; n <= 7; ++n) {
    // (1-t)^{n+1} Σ_j (j+1)^n t^j, truncated at degree n.
    std::vector<BigInt> series(static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; ++j) mpz_ui_pow_ui(series[j].get_mpz_t(), static_cast<unsigned long>(j + 1), static_cast<unsigned long>(n));
    std::vector<BigInt> product(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i)
      for (int k = 0; k <= i; ++k)
        product[i] += series[i - k] * binomial(n + 1, k) * ((k % 2) ? -1 : 1);
    CHECK(h_series_closed(n, 0) == IntPolynomial(product));
  }
  CHECK(h_series_closed(7, 3) == fh_from_flag(flag_f_brute(build_poset(7, 3, Family::R))).h);
}

TEST_CASE("closed h_1") {
  for (int n = 1; n <= 12; ++n) {
    BigInt expected = 1;
    expected <<= n;
    CHECK(h1_closed(n, 0) == expected - n - 1);
  }
  CHECK(h1_closed(3, 1) == 3);
  CHECK(h1_closed(8, 3) == h_series_closed(8, 3).coefficient(1));
}

TEST_CASE("guards and argument checks") {
  CHECK_THROWS_AS(eulerian(12, 1), guard_error);
  CHECK_THROWS_AS(max_chain_count(3, 3), std::invalid_argument);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(10, 3) == 120);
  CHECK(factorial(10) == 3628800);
}

// Exhaustive properties.

TEST_CASE("descent counts equal inverted chain counts, l < n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (int l = 0; l < n; ++l)
      CHECK(flag_h_descents(n, l) == flag_h(flag_f_brute(build_poset(n, l, Family::R))));
}

TEST_CASE("product formula equals chain counts, l < n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for (int l = 0; l < n; ++l) {
      CHECK(flag_f_closed_all(n, l) == flag_f_brute(build_poset(n, l, Family::R)));
      if (n <= 5) {
        const auto o = oracle::sign_poset(n, l, true);
        const auto a = flag_f_closed_all(n, l);
        for (RankSet s = 0; s < a.subset_count(); ++s) CHECK(a[s] == big(oracle::chains_at(o, rank_list(s))));
      }
    }
  }
}

TEST_CASE("three routes to H agree and all h_i are nonnegative, l < n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for (int l = 0; l < n; ++l) {
      const auto fh = fh_from_flag(flag_f_brute(build_poset(n, l, Family::R)));
      CHECK(h_from_f(fh.f, n - l) == fh.h);
      CHECK(h_series_closed(n, l) == fh.h);
      CHECK(f_series_closed(n, l) == fh.f);
      for (const auto& c : fh.h.coefficients()) CHECK(c >= 0);
    }
  }
}

TEST_CASE("chain_from_key is a bijection onto maximal chains, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (int l = 0; l < n; ++l) {
      const auto p = build_poset(n, l, Family::R);
      std::set<std::vector<Index>> images;
      for (const auto& key : all_chain_keys(n, l)) {
        const auto chain = chain_from_key(key, n, l);
        REQUIRE(static_cast<int>(chain.size()) == n - l);
        std::vector<Index> ids;
        for (const auto& t : chain) ids.push_back(*p.find(t));
        for (std::size_t i = 1; i < ids.size(); ++i) CHECK(p.is_cover(ids[i - 1], ids[i]));
        images.insert(ids);
      }
      CHECK(big(images.size()) == max_chain_count(n, l));
      CHECK(big(oracle::maximal_chains(oracle::sign_poset(n, l, true))) == max_chain_count(n, l));
    }
  }
}

TEST_CASE("surjection identity for s <= 10, d <= 6") {
  for (int s = 0; s <= 10; ++s)
    for (int d = 1; d <= 6; ++d) {
      const auto [lhs, rhs] = surjection_identity(s, d);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("h-vector of R_{n,0} is Eulerian, n <= 8; bijection preserves descents, n <= 6") {
  for (int n = 1; n <= 8; ++n) {
    const auto h = h_series_closed(n, 0);
    const auto brute = fh_from_flag(flag_f_brute(build_poset(n, 0, Family::R))).h;
    CHECK(h == brute);
    for (int d = 0; d < n; ++d) {
      CHECK(h.coefficient(static_cast<std::size_t>(d)) == big(oracle::eulerian(n, d)));
      CHECK(eulerian(n, d) == big(oracle::eulerian(n, d)));
    }
  }
  for (int n = 1; n <= 6; ++n) CHECK(eulerian_bijection_check(n));
}

TEST_CASE("h_1 formula matches every computed H, n <= 8") {
  for (int n = 1; n <= 8; ++n)
    for (int l = 0; l < n; ++l) {
      CHECK(h1_closed(n, l) == h_series_closed(n, l).coefficient(1));
      CHECK(h1_closed(n, l) == fh_from_flag(flag_f_brute(build_poset(n, l, Family::R))).h.coefficient(1));
    }
}
