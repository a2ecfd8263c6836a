// Copyright 2026 The signposet Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SIGNPOSET_ENUMERATION_HPP
#define SIGNPOSET_ENUMERATION_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "signposet/poset.hpp"
#include "signposet/shelling.hpp"

namespace signposet {

using BigInt = mpz_class;

/// Binomial coefficient, zero outside 0 <= k <= n.
BigInt binomial(long n, long k);
BigInt factorial(long n);

/// Rank subsets S ⊆ [d] are bitmasks: bit r-1 stands for rank r.
using RankSet = std::uint32_t;

RankSet rank_set(const std::vector<int>& ranks);
std::vector<int> rank_list(RankSet s);

/// Dense map from every S ⊆ [d] to a count (flag f- or flag h-vector).
class FlagVector {
 public:
  static constexpr int kMaxRanks = 20;

  FlagVector() = default;
  explicit FlagVector(int d);

  int d() const { return d_; }
  std::size_t subset_count() const { return values_.size(); }

  BigInt& operator[](RankSet s) { return values_[s]; }
  const BigInt& operator[](RankSet s) const { return values_[s]; }
  const BigInt& at(const std::vector<int>& ranks) const { return values_.at(rank_set(ranks)); }

  friend bool operator==(const FlagVector&, const FlagVector&) = default;

 private:
  int d_ = 0;
  std::vector<BigInt> values_;
};

/// Polynomial with big-integer coefficients, index = degree. Equality ignores
/// trailing zeros.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {}

  std::size_t size() const { return coeffs_.size(); }
  /// Coefficient of t^i; zero beyond the stored range.
  BigInt coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  /// "1+5t+4t^2"
  std::string str() const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b);

 private:
  std::vector<BigInt> coeffs_;
};

/// α_S by counting chains of an unbounded graded poset with ranks 1..d.
FlagVector flag_f_brute(const GradedPoset& p);

/// Product formula for α_S of R_{n,l}; 1 for S = ∅. Throws when S ⊄ [n-l].
BigInt flag_f_closed(int n, int l, const std::vector<int>& ranks);
FlagVector flag_f_closed_all(int n, int l);

/// β_S = Σ_{T⊆S} (-1)^{|S∖T|} α_T.
FlagVector flag_h(const FlagVector& alpha);
/// α_S = Σ_{T⊆S} β_T.
FlagVector flag_f_from_h(const FlagVector& beta);

/// β_S as the number of maximal chains of R̂_{n,l} with descent set S.
FlagVector flag_h_descents(int n, int l, const RunOptions& options = {});

/// Visits every maximal chain of R̂_{n,l} with its labels and descents.
void for_each_labeled_maximal_chain(const GradedPoset& hat,
                                    const std::function<void(const LabeledChain&)>& visit);

struct FHPolynomials {
  IntPolynomial f;  // F(t) = Σ f_{i-1} t^i
  IntPolynomial h;  // H(t) = Σ h_i t^i
};

/// F and H from a flag f-vector. H is computed from β-sums and from
/// H(t) = (1-t)^d F(t/(1-t)); std::logic_error if they disagree.
FHPolynomials fh_from_flag(const FlagVector& alpha);

/// H(t) = Σ_i f_{i-1} t^i (1-t)^{d-i}, in integer arithmetic.
IntPolynomial h_from_f(const IntPolynomial& f, int d);

/// binom(n+l, 2l+1) (n-l-1)!
BigInt max_chain_count(int n, int l);

struct MaximalChainKey {
  std::vector<int> subset;       // (2l+1)-subset of [n+l], increasing
  std::vector<int> permutation;  // one-line notation of a permutation of [n-l-1]
};

/// The maximal chain C(A, π) of R_{n,l}, bottom to top. Throws
/// std::invalid_argument for a malformed key.
std::vector<BlockTuple> chain_from_key(const MaximalChainKey& key, int n, int l);

/// Every key (subset lexicographic, then permutation lexicographic).
std::vector<MaximalChainKey> all_chain_keys(int n, int l);

/// Permutations of [n] with exactly d descents, counted over S_n.
BigInt eulerian(int n, int d);

/// Checks that π ↦ 0̂ ⋖ ({π(1)}) ⋖ … ⋖ 1̂ in R̂_{n,0} preserves descent sets,
/// over all of S_n.
bool eulerian_bijection_check(int n);

/// Both sides of Σ_{compositions of s into d positive parts} multinomial
/// = Σ_i (-1)^i binom(d,i) (d-i)^s.
std::pair<BigInt, BigInt> surjection_identity(int s, int d);

/// Number of chains of R_{n,l} with d+1 elements, from the alternating sum.
BigInt f_d_closed(int n, int l, int d);
/// F(t) from f_d_closed.
IntPolynomial f_series_closed(int n, int l);

/// H(t) from the closed triple-series generating function, truncated exactly.
IntPolynomial h_series_closed(int n, int l);

/// h_1 = l - n + (-1)^{l+1} + Σ_{i=0}^l (-1)^{l-i} binom(n,i) 2^{n-i}.
BigInt h1_closed(int n, int l);

std::string subset_string(RankSet s);

}  // namespace signposet

#endif  // SIGNPOSET_ENUMERATION_HPP
