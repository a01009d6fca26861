#include "bkappa/partitions.hpp"

#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

namespace bkappa {

PartitionTable::PartitionTable(int n_max) {
  if (n_max < 0) throw std::invalid_argument("PartitionTable: n_max must be >= 0");
  values_.resize(static_cast<std::size_t>(n_max) + 1);
  values_[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    mpz_class sum = 0;
    for (int k = 1;; ++k) {
      const long g1 = static_cast<long>(k) * (3L * k - 1) / 2;
      const long g2 = static_cast<long>(k) * (3L * k + 1) / 2;
      if (g1 > n && g2 > n) break;
      if (k % 2 == 1) {
        if (g1 <= n) sum += values_[n - g1];
        if (g2 <= n) sum += values_[n - g2];
      } else {
        if (g1 <= n) sum -= values_[n - g1];
        if (g2 <= n) sum -= values_[n - g2];
      }
    }
    values_[n] = sum;
  }
}

const mpz_class& PartitionTable::at(int n) const {
  if (n < 0 || n > n_max()) throw std::out_of_range("PartitionTable: n out of range");
  return values_[static_cast<std::size_t>(n)];
}

const mpz_class& partition_exact(int n) {
  static const PartitionTable table;
  return table.at(n);
}

Rational dedekind_sum(long h, long k) {
  if (k < 1) throw std::invalid_argument("dedekind_sum: k must be >= 1");
  Rational sum(0);
  const Rational half(1, 2);
  for (long mu = 1; mu < k; ++mu) {
    Rational a(mu, k);
    a -= half;  // mu/k < 1, floor term vanishes
    Rational b(h * mu, k);
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), b.get_num().get_mpz_t(), b.get_den().get_mpz_t());
    b -= Rational(fl);
    b -= half;
    sum += a * b;
  }
  sum.canonicalize();
  return sum;
}

namespace {

// exp(i pi q) for rational q, reduced mod 2 exactly before conversion.
std::complex<double> exp_i_pi(const Rational& q) {
  Rational r = q;
  mpz_class fl;
  Rational half_q = r / 2;
  mpz_fdiv_q(fl.get_mpz_t(), half_q.get_num().get_mpz_t(), half_q.get_den().get_mpz_t());
  r -= Rational(2) * Rational(fl);
  const double phase = M_PI * r.get_d();
  return {std::cos(phase), std::sin(phase)};
}

}  // namespace

HrrEval partition_hrr_detail(int n, int k_terms) {
  if (n < 1) throw std::invalid_argument("partition_hrr: N must be >= 1");
  if (k_terms < 1) throw std::invalid_argument("partition_hrr: K must be >= 1");
  HrrEval out;
  const double u = n - 1.0 / 24.0;
  const double su = std::sqrt(u);
  double total = 0.0;
  for (int k = 1; k <= k_terms; ++k) {
    std::complex<double> a_k{0.0, 0.0};
    int count = 0;
    for (int h = 0; h < k; ++h) {
      if (k > 1 && std::gcd(h, k) != 1) continue;
      Rational q = dedekind_sum(h, k);
      q -= Rational(2L * h * n, k);
      a_k += exp_i_pi(q);
      ++count;
    }
    if (count > 0) {
      out.max_im_residue =
          std::max(out.max_im_residue, std::abs(a_k.imag()) / static_cast<double>(count));
    }
    const double c = (M_PI / k) * std::sqrt(2.0 / 3.0);
    const double dpsi =
        c * std::cosh(c * su) / (2.0 * u) - std::sinh(c * su) / (2.0 * u * su);
    total += a_k.real() * std::sqrt(static_cast<double>(k)) * dpsi;
  }
  out.value = total / (M_PI * std::sqrt(2.0));
  return out;
}

double partition_hrr(int n, int k_terms) { return partition_hrr_detail(n, k_terms).value; }

namespace {

// Unordered factorizations of n into factors in [2, max_factor], enumerated
// largest factor first.
long long count_factorizations(long long n, long long max_factor) {
  if (n == 1) return 1;
  long long count = 0;
  if (n <= max_factor) count += 1;  // n itself as a single factor
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    if (d <= max_factor) count += count_factorizations(n / d, d);
    const long long e = n / d;
    if (e != d && e != n && e <= max_factor) count += count_factorizations(d, e);
  }
  return count;
}

}  // namespace

long long multiplicative_partitions(long long n) {
  if (n < 1) throw std::invalid_argument("multiplicative_partitions: n must be >= 1");
  if (n > 1000000) {
    throw std::invalid_argument("multiplicative_partitions: n capped at 10^6");
  }
  return count_factorizations(n, n);
}

namespace {

double log_of_mpz(const mpz_class& v) {
  long exp2;
  const double d = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log(d) + static_cast<double>(exp2) * M_LN2;
}

}  // namespace

double entropy_change_additive(int m, int n) {
  return log_of_mpz(partition_exact(n)) - log_of_mpz(partition_exact(m));
}

double entropy_change_multiplicative(long long m, long long n) {
  if (m < 1 || n < 1 || n % m != 0) {
    throw std::invalid_argument("entropy_change_multiplicative: M must divide N");
  }
  return std::log(static_cast<double>(multiplicative_partitions(n)) /
                  static_cast<double>(multiplicative_partitions(m)));
}

IndexedParts<long long> radix_partition(long long n, Radix p,
                                        const std::vector<std::vector<int>>& grouping) {
  if (n < 1) throw std::invalid_argument("radix_partition: N must be >= 1");
  int top = 0;
  {
    long long v = n;
    while (v >= p.value()) {
      v /= p.value();
      ++top;
    }
  }
  std::vector<int> seen(static_cast<std::size_t>(top) + 1, 0);
  for (const auto& group : grouping) {
    for (int k : group) {
      if (k < 0 || k > top || seen[static_cast<std::size_t>(k)]++) {
        throw std::invalid_argument("radix_partition: grouping must partition {0..floor(log_p N)}");
      }
    }
  }
  for (int s : seen) {
    if (s != 1) {
      throw std::invalid_argument("radix_partition: grouping must partition {0..floor(log_p N)}");
    }
  }
  IndexedParts<long long> parts;
  int label = 1;
  for (const auto& group : grouping) {
    long long part = 0;
    for (int k : group) {
      long long pk = 1;
      for (int i = 0; i < k; ++i) pk *= p.value();
      part += pk * digit(p, k, static_cast<double>(n));
    }
    parts.insert(label++, part);
  }
  return parts;
}

}  // namespace bkappa
