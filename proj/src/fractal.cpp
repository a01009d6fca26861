#include "bkappa/fractal.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace bkappa {

double MotherFunction::eval_real(double x) const {
  double v = 0.0;
  switch (id) {
    case Id::log1p:
      if (x <= -1.0) throw std::domain_error("log1p: x <= -1");
      v = std::log1p(x);
      break;
    case Id::sin:
      v = std::sin(x);
      break;
    case Id::tan:
      v = std::tan(x);
      break;
    case Id::polynomial: {
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
      break;
    }
    case Id::table: {
      if (table_values.size() < 2) throw std::domain_error("table: too few samples");
      const double t = (x - table_x0) / table_dx;
      if (t < 0.0 || t > static_cast<double>(table_values.size() - 1)) {
        throw std::domain_error("table: x outside tabulated range");
      }
      const auto i = std::min(static_cast<std::size_t>(t), table_values.size() - 2);
      const double w = t - static_cast<double>(i);
      v = (1.0 - w) * table_values[i] + w * table_values[i + 1];
      break;
    }
  }
  if (!std::isfinite(v)) throw std::domain_error("mother function value not finite");
  return v;
}

std::complex<double> MotherFunction::eval_complex(std::complex<double> z) const {
  std::complex<double> v{0.0, 0.0};
  switch (id) {
    case Id::log1p:
      v = std::log(1.0 + z);
      break;
    case Id::sin:
      v = std::sin(z);
      break;
    case Id::tan:
      v = std::tan(z);
      break;
    case Id::polynomial: {
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * z + *it;
      break;
    }
    case Id::table:
      if (z.imag() != 0.0) throw std::domain_error("table: real axis only");
      return {eval_real(z.real()), 0.0};
  }
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw std::domain_error("mother function value not finite");
  }
  return v;
}

FractalSpec::FractalSpec(Radix p_, int lambda_, int n_, int depth_, MotherFunction mother_)
    : p(p_), lambda(lambda_), n(n_), depth(depth_), mother(std::move(mother_)) {
  if (lambda < 2) throw std::invalid_argument("FractalSpec: lambda must be >= 2");
  if (n < 0 || n > lambda - 1) {
    throw std::invalid_argument("FractalSpec: n must be in [0, lambda-1]");
  }
  if (depth < 1) throw std::invalid_argument("FractalSpec: depth must be >= 1");
  if (static_cast<double>(depth) * std::log2(static_cast<double>(p.value())) > 500.0) {
    throw std::invalid_argument("FractalSpec: p^depth too large");
  }
}

int FractalSpec::default_depth(Radix p) {
  return static_cast<int>(std::ceil(12.0 / std::log10(static_cast<double>(p.value())))) + 1;
}

namespace {

using u128 = unsigned __int128;

// floor(log_p a); values within ~1e-12 relative of a power boundary snap up,
// so exact powers of p keep their leading digit.
int floor_log_radix(double a, int p) {
  return static_cast<int>(
      std::floor(std::log(a) / std::log(static_cast<double>(p)) + 1e-12));
}

// Digits of a at k = anchor_k - depth + 1 .. anchor_k, ascending in the
// returned vector: the base-p expansion of the exact integer
// floor(a * p^(depth-1-anchor_k)). a is a dyadic rational, so the scaled
// value is computed without rounding; digit range [0, p-1] and the
// telescoping reconstruction hold exactly.
std::vector<int> extract_digits(double a, int p, int depth, int anchor_k) {
  std::vector<int> digits(static_cast<std::size_t>(depth), 0);
  if (a <= 0.0) return digits;
  const long e = depth - 1 - anchor_k;

  int exp2 = 0;
  const double mant = std::frexp(a, &exp2);
  const auto m = static_cast<u128>(std::ldexp(mant, 53));  // a = m * 2^(exp2-53)
  const long shift = exp2 - 53;

  const double bits = static_cast<double>(e) * std::log2(static_cast<double>(p));
  if (e >= 0 && shift > -127 &&
      bits + 54.0 + static_cast<double>(shift > 0 ? shift : 0) < 127.0) {
    u128 pe = 1;
    for (long i = 0; i < e; ++i) pe *= static_cast<u128>(p);
    const u128 prod = m * pe;
    u128 scaled = shift >= 0 ? (prod << shift) : (prod >> (-shift));
    for (int i = 0; i < depth; ++i) {
      digits[static_cast<std::size_t>(i)] = static_cast<int>(scaled % static_cast<u128>(p));
      scaled /= static_cast<u128>(p);
    }
    return digits;
  }

  // arbitrary-precision fallback for extreme exponents
  mpq_class aq(a);  // exact for finite doubles
  mpz_class pe;
  mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(e >= 0 ? e : -e));
  mpq_class prod = e >= 0 ? mpq_class(aq * pe) : mpq_class(aq / pe);
  mpz_class scaled;
  mpz_fdiv_q(scaled.get_mpz_t(), prod.get_num().get_mpz_t(), prod.get_den().get_mpz_t());
  for (int i = 0; i < depth; ++i) {
    mpz_class rem;
    mpz_fdiv_qr_ui(scaled.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(),
                   static_cast<unsigned long>(p));
    digits[static_cast<std::size_t>(i)] = static_cast<int>(mpz_get_ui(rem.get_mpz_t()));
  }
  return digits;
}

// sum_k p^k d_k w(k), where digits cover k = anchor-depth+1 .. anchor and
// w(k) = d_lambda(0, |k|+n) = (|k|+n) mod lambda.
double weighted_digit_sum(const std::vector<int>& digits, int p, int anchor_k,
                          int lambda, int n) {
  double sum = 0.0;
  const int depth = static_cast<int>(digits.size());
  for (int i = 0; i < depth; ++i) {
    const int k = anchor_k - depth + 1 + i;
    const int w = (std::abs(k) + n) % lambda;
    if (digits[static_cast<std::size_t>(i)] == 0 || w == 0) continue;
    sum += std::pow(static_cast<double>(p), k) *
           static_cast<double>(digits[static_cast<std::size_t>(i)] * w);
  }
  return sum;
}

}  // namespace

double fractal_real(const FractalSpec& spec, double x) {
  const double f = spec.mother.eval_real(x);
  if (f == 0.0) return 0.0;
  const int p = spec.p.value();
  const double a = std::abs(f);
  const int anchor = floor_log_radix(a, p);
  const std::vector<int> digits = extract_digits(a, p, spec.depth, anchor);
  const double pref = 2.0 * (f > 0 ? 1.0 : -1.0) /
                      (static_cast<double>(spec.lambda) * (spec.lambda - 1));
  return pref * weighted_digit_sum(digits, p, anchor, spec.lambda, spec.n);
}

std::complex<double> fractal_complex(const FractalSpec& spec, std::complex<double> z) {
  const std::complex<double> f = spec.mother.eval_complex(z);
  if (f == std::complex<double>{0.0, 0.0}) return {0.0, 0.0};
  const int p = spec.p.value();
  const int anchor = floor_log_radix(std::abs(f), p);
  const double re = f.real(), im = f.imag();
  const std::vector<int> dre = extract_digits(std::abs(re), p, spec.depth, anchor);
  const std::vector<int> dim = extract_digits(std::abs(im), p, spec.depth, anchor);
  const double pref = 2.0 / (static_cast<double>(spec.lambda) * (spec.lambda - 1));
  const double sre = re > 0 ? 1.0 : (re < 0 ? -1.0 : 0.0);
  const double sim = im > 0 ? 1.0 : (im < 0 ? -1.0 : 0.0);
  return {pref * sre * weighted_digit_sum(dre, p, anchor, spec.lambda, spec.n),
          pref * sim * weighted_digit_sum(dim, p, anchor, spec.lambda, spec.n)};
}

namespace {

template <class Value, class Eval>
Value fractal_embedding_impl(const FractalSpec& spec, int m, Kappa kappa,
                             const Eval& eval_object) {
  FractalSpec obj = spec;
  if (kappa.is_zero()) {
    if (m < 0 || m > spec.lambda - 1) return Value{};
    obj.n = m;
    return eval_object(obj);
  }
  Value sum{};
  if (kappa.is_infinite()) {
    for (int n = 0; n < spec.lambda; ++n) {
      obj.n = n;
      sum += eval_object(obj);
    }
    return sum;
  }
  const double pref = 1.0 + 2.0 * kappa.value();
  for (int n = 0; n < spec.lambda; ++n) {
    obj.n = n;
    sum += eval_object(obj) * (pref * b_kappa(static_cast<double>(m - n), 0.5, kappa));
  }
  return sum;
}

}  // namespace

double fractal_embedding(const FractalSpec& spec, int m, Kappa kappa, double x) {
  return fractal_embedding_impl<double>(
      spec, m, kappa, [&](const FractalSpec& s) { return fractal_real(s, x); });
}

std::complex<double> fractal_embedding(const FractalSpec& spec, int m, Kappa kappa,
                                       std::complex<double> z) {
  return fractal_embedding_impl<std::complex<double>>(
      spec, m, kappa, [&](const FractalSpec& s) { return fractal_complex(s, z); });
}

GridTable sample_grid(const std::function<std::complex<double>(std::complex<double>)>& f,
                      double x0, double y0, double x1, double y1,
                      std::size_t width, std::size_t height) {
  if (width < 1 || height < 1) throw std::invalid_argument("sample_grid: empty grid");
  GridTable grid;
  grid.width = width;
  grid.height = height;
  grid.x0 = x0;
  grid.y0 = y0;
  grid.x1 = x1;
  grid.y1 = y1;
  grid.values.resize(width * height);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t iy = 0; iy < height; ++iy) {
    const double y =
        height == 1 ? y0 : y0 + (y1 - y0) * static_cast<double>(iy) / static_cast<double>(height - 1);
    for (std::size_t ix = 0; ix < width; ++ix) {
      const double x =
          width == 1 ? x0 : x0 + (x1 - x0) * static_cast<double>(ix) / static_cast<double>(width - 1);
      try {
        grid.at(ix, iy) = f({x, y});
      } catch (const std::exception&) {
        grid.at(ix, iy) = {nan, nan};
      }
    }
  }
  return grid;
}

void write_grid_csv(const GridTable& grid, std::ostream& out) {
  out << "x,y,re,im\n";
  char buf[128];
  for (std::size_t iy = 0; iy < grid.height; ++iy) {
    const double y = grid.height == 1
                         ? grid.y0
                         : grid.y0 + (grid.y1 - grid.y0) * static_cast<double>(iy) /
                               static_cast<double>(grid.height - 1);
    for (std::size_t ix = 0; ix < grid.width; ++ix) {
      const double x = grid.width == 1
                           ? grid.x0
                           : grid.x0 + (grid.x1 - grid.x0) * static_cast<double>(ix) /
                                 static_cast<double>(grid.width - 1);
      const std::complex<double> v = grid.at(ix, iy);
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", x, y, v.real(), v.imag());
      out << buf;
    }
  }
}

void write_grid_binary(const GridTable& grid, std::ostream& out) {
  auto put = [&out](double v) {
    static_assert(sizeof(double) == 8);
    char raw[8];
    std::memcpy(raw, &v, 8);  // little-endian on all supported targets
    out.write(raw, 8);
  };
  put(static_cast<double>(grid.width));
  put(static_cast<double>(grid.height));
  put(grid.x0);
  put(grid.y0);
  put(grid.x1);
  put(grid.y1);
  for (const std::complex<double>& v : grid.values) {
    put(v.real());
    put(v.imag());
  }
}

}  // namespace bkappa
