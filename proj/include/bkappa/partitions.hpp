#pragma once

#include <gmpxx.h>

#include <vector>

#include "bkappa/core.hpp"
#include "bkappa/embedding.hpp"

namespace bkappa {

/// Exact rational; used for Dedekind sums to stay clear of floor-adjacent
/// floating-point rounding.
using Rational = mpq_class;

/// Exact p(0..n_max) via the pentagonal-number recurrence, arbitrary precision.
class PartitionTable {
 public:
  explicit PartitionTable(int n_max = kDefaultNMax);

  int n_max() const { return static_cast<int>(values_.size()) - 1; }
  const mpz_class& at(int n) const;

  static constexpr int kDefaultNMax = 2000;

 private:
  std::vector<mpz_class> values_;
};

/// Exact number of unrestricted integer partitions of n. Uses a shared table
/// up to PartitionTable::kDefaultNMax; larger n is an error.
const mpz_class& partition_exact(int n);

/// Dedekind sum s(h,k) = sum_{mu=1}^{k-1} ((mu/k - floor - 1/2)(h mu/k - floor - 1/2)),
/// exact in rationals.
Rational dedekind_sum(long h, long k);

struct HrrEval {
  double value = 0.0;
  /// max over k of |Im A_k| / (number of unit-modulus summands in A_k);
  /// mathematically zero, bounded by rounding in practice.
  double max_im_residue = 0.0;
};

/// Hardy-Ramanujan-Rademacher series for p(N), truncated at k <= K terms.
/// The x-derivative of sinh(c sqrt(x-1/24))/sqrt(x-1/24) is applied in closed
/// form at x = N and the real part of the exponential sum is used.
HrrEval partition_hrr_detail(int n, int k_terms);
double partition_hrr(int n, int k_terms);

/// Number of unordered factorizations of n into integers >= 2 (counting n
/// itself); m(1) = 1. Desk scale: n <= 10^6.
long long multiplicative_partitions(long long n);

/// Entropy change ln(p(N)/p(M)) of an additive embedding M -> N.
double entropy_change_additive(int m, int n);

/// Entropy change ln(m(N)/m(M)) of a multiplicative embedding; requires M | N.
double entropy_change_multiplicative(long long m, long long n);

/// Splits N into parts sum_{k in group} p^k d_p(k, N) per digit-index group.
/// `grouping` must partition {0 .. floor(log_p N)}; part labels are 1-based
/// group positions. The parts always sum to N.
IndexedParts<long long> radix_partition(long long n, Radix p,
                                        const std::vector<std::vector<int>>& grouping);

}  // namespace bkappa
