#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace bkappa {

/// Deformation parameter kappa in [0, +inf]. Zero and infinity are admissible
/// and are dispatched to exact limit branches by the functions that take one.
class Kappa {
 public:
  constexpr Kappa() = default;

  explicit Kappa(double v) : value_(v) {
    if (std::isnan(v) || v < 0.0) {
      throw std::invalid_argument("Kappa: value must be >= 0");
    }
  }

  static constexpr Kappa zero() { return Kappa{}; }

  static constexpr Kappa infinity() {
    Kappa k;
    k.value_ = std::numeric_limits<double>::infinity();
    return k;
  }

  constexpr bool is_zero() const { return value_ == 0.0; }
  constexpr bool is_infinite() const { return std::isinf(value_); }
  constexpr double value() const { return value_; }

 private:
  double value_ = 0.0;
};

/// Radix (base) p >= 2 for digit expansions.
class Radix {
 public:
  explicit Radix(int p) : value_(p) {
    if (p < 2) throw std::invalid_argument("Radix: p must be >= 2");
  }
  constexpr int value() const { return value_; }

 private:
  int value_;
};

namespace detail {

// t/|t| with the 0 -> 0 convention.
inline double sign0(double t) { return (t > 0.0) - (t < 0.0); }

// tanh with saturation for |u| > 20, where the exact value differs from
// +-1 by less than 1e-17.
inline double tanh_sat(double u) {
  if (u > 20.0) return 1.0;
  if (u < -20.0) return -1.0;
  return std::tanh(u);
}

}  // namespace detail

/// Rectangular indicator B(x,y) = ((x+y)/|x+y| - (x-y)/|x-y|)/2.
/// Returns sign(y) strictly inside (-y, y), 0 strictly outside, sign(y)/2 on
/// the boundary |x| = |y|. Total on all of R^2 via the t/|t| := 0 convention.
inline double b_function(double x, double y) {
  return 0.5 * (detail::sign0(x + y) - detail::sign0(x - y));
}

/// Smoothed indicator B_kappa(x,y) = [tanh((x+y)/k) - tanh((x-y)/k)]/2.
/// kappa = 0 dispatches to the exact B-function limit; kappa = inf gives 0.
inline double b_kappa(double x, double y, Kappa kappa) {
  if (kappa.is_zero()) return b_function(x, y);
  if (kappa.is_infinite()) return 0.0;
  const double k = kappa.value();
  return 0.5 * (detail::tanh_sat((x + y) / k) - detail::tanh_sat((x - y) / k));
}

/// d/dkappa of B_kappa(j, 1/2) for integer j:
///   (1/(2 k^2)) [ (j+1/2) tanh^2((j+1/2)/k) - (j-1/2) tanh^2((j-1/2)/k) - 1 ].
/// The bracket vanishes exponentially as kappa -> 0, so the limit there is 0.
inline double db_kappa_dkappa(int j, Kappa kappa) {
  if (kappa.is_zero() || kappa.is_infinite()) return 0.0;
  const double k = kappa.value();
  const double tp = detail::tanh_sat((j + 0.5) / k);
  const double tm = detail::tanh_sat((j - 0.5) / k);
  return ((j + 0.5) * tp * tp - (j - 0.5) * tm * tm - 1.0) / (2.0 * k * k);
}

/// k-th radix-p digit of x >= 0: floor(x/p^k) - p*floor(x/p^(k+1)), in [0, p-1].
/// Integral x with k >= 0 uses exact integer arithmetic.
inline int digit(Radix p, int k, double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw std::domain_error("digit: x must be finite and >= 0");
  }
  const double pd = static_cast<double>(p.value());
  if (k >= 0 && x < 9.007199254740992e15 && std::floor(x) == x) {
    auto xi = static_cast<std::uint64_t>(x);
    for (int i = 0; i < k; ++i) {
      xi /= static_cast<std::uint64_t>(p.value());
      if (xi == 0) return 0;
    }
    return static_cast<int>(xi % static_cast<std::uint64_t>(p.value()));
  }
  const double q = std::floor(x * std::pow(pd, -k));
  const double q1 = std::floor(x * std::pow(pd, -(k + 1)));
  return static_cast<int>(q - pd * q1);
}

/// Complex digit: sign(Re z) d_p(k,|Re z|) + i sign(Im z) d_p(k,|Im z|).
inline std::complex<double> complex_digit(Radix p, int k, std::complex<double> z) {
  const double re = z.real(), im = z.imag();
  const double dr = re == 0.0 ? 0.0 : detail::sign0(re) * digit(p, k, std::abs(re));
  const double di = im == 0.0 ? 0.0 : detail::sign0(im) * digit(p, k, std::abs(im));
  return {dr, di};
}

/// Characteristic function of the disk of radius R centered at the origin,
/// smoothed by kappa: B_kappa(sqrt(x^2+y^2), R).
inline double disk(double x, double y, double radius, Kappa kappa) {
  if (!(radius > 0.0)) throw std::invalid_argument("disk: R must be > 0");
  return b_kappa(std::hypot(x, y), radius, kappa);
}

/// Monotone time parameterization kappa(t) = e^t - 1, kappa(0) = 0.
inline Kappa kappa_schedule(double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("kappa_schedule: t must be >= 0");
  return Kappa(std::expm1(t));
}

}  // namespace bkappa
