#include "bkappa/embedding.hpp"

#include <cmath>

namespace bkappa {

std::vector<long long> prime_factors(long long n) {
  if (n < 2) throw std::invalid_argument("prime_factors: n must be >= 2");
  std::vector<long long> factors;
  for (long long d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      factors.push_back(d);
      n /= d;
    }
  }
  if (n > 1) factors.push_back(n);
  return factors;
}

double multiplicative_embed(long long n_value, int branch, Kappa kappa) {
  if (n_value < 2) throw std::invalid_argument("multiplicative_embed: N must be >= 2");
  const std::vector<long long> factors = prime_factors(n_value);
  const int n0 = static_cast<int>(factors.size());
  if (kappa.is_zero()) {
    if (branch >= 1 && branch <= n0) return static_cast<double>(factors[branch - 1]);
    return 1.0;  // empty exponent
  }
  if (kappa.is_infinite()) return static_cast<double>(n_value);
  const double pref = 1.0 + 2.0 * kappa.value();
  double prod = 1.0;
  for (int j = 1; j <= n0; ++j) {
    const double w = pref * b_kappa(static_cast<double>(branch - j), 0.5, kappa);
    prod *= std::pow(static_cast<double>(factors[j - 1]), w);
  }
  return prod;
}

double venn_sum(const std::vector<DiskSpec>& disks, double x, double y,
                Kappa kappa0, Kappa kappa1, int n) {
  IndexedParts<double> parts;
  int label = 0;
  for (const DiskSpec& d : disks) {
    parts.insert(label++, disk(x - d.x0, y - d.y0, d.radius, kappa1));
  }
  return evaluate(parts, n, kappa0);
}

}  // namespace bkappa
