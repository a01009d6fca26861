#pragma once

#include <complex>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bkappa/core.hpp"

namespace bkappa {

/// Fixed registry of "mother" functions the fractal decomposition is applied
/// to. `polynomial` carries real ascending coefficients; `table` carries
/// uniform samples with linear interpolation (real axis only).
struct MotherFunction {
  enum class Id { log1p, sin, tan, polynomial, table };

  Id id = Id::log1p;
  std::vector<double> coeffs;       // polynomial
  double table_x0 = 0.0, table_dx = 1.0;
  std::vector<double> table_values;

  static MotherFunction log1p() { return {Id::log1p, {}, 0, 1, {}}; }
  static MotherFunction sin() { return {Id::sin, {}, 0, 1, {}}; }
  static MotherFunction tan() { return {Id::tan, {}, 0, 1, {}}; }
  static MotherFunction polynomial(std::vector<double> c) {
    return {Id::polynomial, std::move(c), 0, 1, {}};
  }
  static MotherFunction table(double x0, double dx, std::vector<double> v) {
    return {Id::table, {}, x0, dx, std::move(v)};
  }

  /// Throws std::domain_error outside the domain or on non-finite values.
  double eval_real(double x) const;
  std::complex<double> eval_complex(std::complex<double> z) const;
};

/// Parameters of one pln fractal object F_{p,lambda,n} f: radix p, part count
/// lambda, part index n in [0, lambda-1], and the truncation depth D (number
/// of radix digits kept below the leading one).
struct FractalSpec {
  Radix p;
  int lambda = 2;
  int n = 0;
  int depth = 1;
  MotherFunction mother;

  FractalSpec(Radix p_, int lambda_, int n_, int depth_, MotherFunction mother_);

  /// Depth giving relative truncation <= 1e-12: ceil(12/log10 p) + 1.
  static int default_depth(Radix p);
};

/// n-th fractal object of the decomposition of the real mother function:
///   (2 sign f(x) / (lambda(lambda-1))) sum_k p^k d_p(k,|f(x)|) d_lambda(0,|k|+n)
/// with k running from floor(log_p |f(x)|) down through `depth` digits.
/// f(x) = 0 gives 0.
double fractal_real(const FractalSpec& spec, double x);

/// Complex variant with the complex digit function; the truncation window is
/// anchored at floor(log_p |f(z)|).
std::complex<double> fractal_complex(const FractalSpec& spec, std::complex<double> z);

/// Embedding over the lambda fractal objects of `spec` (its n field is
/// ignored): (1+2k) sum_n B_kappa(m-n,1/2) F_{p,lambda,n}(x). Branch m at
/// kappa = 0 is the m-th object; kappa = inf reproduces the mother function
/// up to the truncation tail.
double fractal_embedding(const FractalSpec& spec, int m, Kappa kappa, double x);
std::complex<double> fractal_embedding(const FractalSpec& spec, int m, Kappa kappa,
                                       std::complex<double> z);

/// Dense rectangular table of sampled values; evaluation errors become NaN
/// markers rather than failures.
struct GridTable {
  std::size_t width = 0, height = 0;
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  std::vector<std::complex<double>> values;  // row-major, height rows

  std::complex<double>& at(std::size_t ix, std::size_t iy) {
    return values[iy * width + ix];
  }
  const std::complex<double>& at(std::size_t ix, std::size_t iy) const {
    return values[iy * width + ix];
  }
};

/// Samples f over a real interval (height 1) or a complex rectangle.
GridTable sample_grid(const std::function<std::complex<double>(std::complex<double>)>& f,
                      double x0, double y0, double x1, double y1,
                      std::size_t width, std::size_t height);

/// CSV with header x,y,re,im; one row per sample, row-major.
void write_grid_csv(const GridTable& grid, std::ostream& out);

/// Raw binary: width, height, x0, y0, x1, y1 as 8-byte little-endian doubles,
/// then row-major (re, im) pairs.
void write_grid_binary(const GridTable& grid, std::ostream& out);

}  // namespace bkappa
