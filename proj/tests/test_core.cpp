#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "bkappa/core.hpp"

using namespace bkappa;

TEST_CASE("b_function boundary and interior values") {
  CHECK(b_function(0.2, 0.5) == 1.0);
  CHECK(b_function(3.0, 0.5) == 0.0);
  CHECK(b_function(0.5, 0.5) == 0.5);
  CHECK(b_function(-0.5, 0.5) == 0.5);
  CHECK(b_function(0.0, 0.5) == 1.0);
  CHECK(b_function(1.0, 0.5) == 0.0);  // Kronecker delta on integers
  CHECK(b_function(0.0, 0.0) == 0.0);
  CHECK(b_function(0.2, -0.5) == -1.0);
}

TEST_CASE("b_kappa limit branches and interior value") {
  CHECK(b_kappa(0.0, 0.5, Kappa{1.0}) == doctest::Approx(std::tanh(0.5)).epsilon(1e-15));
  CHECK(b_kappa(0.0, 0.5, Kappa::zero()) == 1.0);
  CHECK(b_kappa(1.0, 0.5, Kappa::zero()) == 0.0);
  CHECK(b_kappa(0.0, 0.5, Kappa::infinity()) == 0.0);

  // kappa B_kappa(x,y)/y -> 1 as kappa -> infinity
  const double k = 1e6;
  const double v = b_kappa(7.0, 0.5, Kappa{k});
  CHECK(std::abs(k * v / 0.5 - 1.0) < 1e-9);
}

TEST_CASE("b_kappa is even in x and odd in y") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::uniform_real_distribution<double> uk(0.0, 10.0);
  for (int i = 0; i < 500; ++i) {
    const double x = u(rng), y = u(rng);
    const Kappa kap{uk(rng)};
    CHECK(b_kappa(-x, y, kap) == b_kappa(x, y, kap));
    CHECK(b_kappa(x, -y, kap) == -b_kappa(x, y, kap));
  }
  CHECK(b_kappa(-1.2, 0.5, Kappa::zero()) == b_kappa(1.2, 0.5, Kappa::zero()));
}

TEST_CASE("b_kappa approaches the B-function for small kappa") {
  const Kappa small{1e-3};
  for (double x : {-2.0, -0.7, -0.2, 0.0, 0.3, 0.9, 1.5, 3.0}) {
    for (double y : {0.25, 0.5, 1.0, -0.5}) {
      if (std::abs(std::abs(x) - std::abs(y)) < 0.05) continue;
      CHECK(std::abs(b_kappa(x, y, small) - b_function(x, y)) < 1e-9);
    }
  }
}

TEST_CASE("large-kappa law on a grid") {
  const Kappa big{1e6};
  for (double x : {-10.0, -3.0, 0.0, 2.0, 10.0}) {
    for (double y : {-10.0, -1.0, 0.5, 4.0, 10.0}) {
      CHECK(std::abs(1e6 * b_kappa(x, y, big) / y - 1.0) < 1e-6);
    }
  }
}

TEST_CASE("db_kappa_dkappa matches central differences") {
  for (double k : {0.01, 0.1, 0.5, 1.0, 5.0, 25.0, 100.0}) {
    for (int j = 0; j <= 5; ++j) {
      const double h = 1e-6 * k;
      const double fd = (b_kappa(j, 0.5, Kappa{k + h}) - b_kappa(j, 0.5, Kappa{k - h})) /
                        (2.0 * h);
      CHECK(std::abs(db_kappa_dkappa(j, Kappa{k}) - fd) <=
            1e-6 * std::max(1.0, std::abs(fd)));
    }
  }
  CHECK(db_kappa_dkappa(0, Kappa::zero()) == 0.0);
  CHECK(std::abs(db_kappa_dkappa(0, Kappa{1e-6})) <= 1e-30);
}

TEST_CASE("digit extracts radix digits") {
  CHECK(digit(Radix{10}, 0, 347.0) == 7);
  CHECK(digit(Radix{10}, 1, 347.0) == 4);
  CHECK(digit(Radix{10}, 2, 347.0) == 3);
  CHECK(digit(Radix{10}, 3, 347.0) == 0);
  CHECK(digit(Radix{10}, -1, 0.25) == 2);
  CHECK(digit(Radix{10}, -2, 0.25) == 5);
  CHECK(digit(Radix{2}, 0, 6.0) == 0);
  CHECK(digit(Radix{2}, 1, 6.0) == 1);
  CHECK_THROWS_AS(digit(Radix{10}, 0, -1.0), std::domain_error);
}

TEST_CASE("digit reconstruction and range over random integers") {
  std::mt19937_64 rng(11);
  for (int p : {2, 3, 7, 10}) {
    const Radix radix{p};
    double pmax = 1.0;
    for (int i = 0; i < 8; ++i) pmax *= p;
    std::uniform_real_distribution<double> u(0.0, pmax - 1.0);
    for (int trial = 0; trial < 200; ++trial) {
      const double x = std::floor(u(rng));
      double sum = 0.0, pk = 1.0;
      for (int k = 0; k < 8; ++k) {
        const int d = digit(radix, k, x);
        CHECK(d >= 0);
        CHECK(d <= p - 1);
        sum += pk * d;
        pk *= p;
      }
      CHECK(sum == x);
    }
  }
}

TEST_CASE("complex_digit applies the digit to both components") {
  using C = std::complex<double>;
  CHECK(complex_digit(Radix{10}, 0, C{3.0, -4.0}) == C{3.0, -4.0});
  CHECK(complex_digit(Radix{10}, 0, C{0.0, 0.0}) == C{0.0, 0.0});
  // 5 = 12 base 3, 7 = 21 base 3
  CHECK(complex_digit(Radix{3}, 1, C{5.0, 7.0}) == C{1.0, 2.0});
  CHECK(complex_digit(Radix{3}, 0, C{5.0, 7.0}) == C{2.0, 1.0});
  CHECK(complex_digit(Radix{10}, 0, C{-13.0, 2.0}) == C{-3.0, 2.0});
}

TEST_CASE("disk characteristic function") {
  CHECK(disk(0.0, 0.0, 1.0, Kappa::zero()) == 1.0);
  CHECK(disk(1.0, 0.0, 1.0, Kappa::zero()) == 0.5);
  CHECK(disk(2.0, 1.0, 1.0, Kappa::zero()) == 0.0);
  // Disk_kappa ~ R/kappa for large kappa
  const double v = disk(5.0, 3.0, 1.0, Kappa{1e6});
  CHECK(v == doctest::Approx(1.0 / 1e6).epsilon(1e-4));
  CHECK_THROWS_AS(disk(0.0, 0.0, -1.0, Kappa::zero()), std::invalid_argument);
}

TEST_CASE("kappa_schedule") {
  CHECK(kappa_schedule(0.0).value() == 0.0);
  CHECK(kappa_schedule(std::log(2.0)).value() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(kappa_schedule(30.0).value() == doctest::Approx(std::exp(30.0)).epsilon(1e-12));
  CHECK_THROWS_AS(kappa_schedule(-1.0), std::invalid_argument);
}

TEST_CASE("Kappa and Radix validate their invariants") {
  CHECK_THROWS_AS(Kappa{-0.5}, std::invalid_argument);
  CHECK_THROWS_AS(Kappa{std::nan("")}, std::invalid_argument);
  CHECK(Kappa{std::numeric_limits<double>::infinity()}.is_infinite());
  CHECK(Kappa::zero().is_zero());
  CHECK_THROWS_AS(Radix{1}, std::invalid_argument);
}
