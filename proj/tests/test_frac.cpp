#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "theta_gauss/frac.hpp"

using theta_gauss::Decomposition;
using theta_gauss::decompose;

TEST_CASE("floor split on plain values") {
  Decomposition d = decompose(2.7);
  CHECK(d.int_part == 2);
  CHECK(d.frac_part == 2.7 - 2.0);
  CHECK(d.centered == d.frac_part - 0.5);

  d = decompose(-2.6);
  CHECK(d.int_part == -3);
  CHECK(d.frac_part == -2.6 + 3.0);

  d = decompose(7.0);
  CHECK(d.int_part == 7);
  CHECK(d.frac_part == 0.0);
  CHECK(d.centered == -0.5);

  d = decompose(0.0);
  CHECK(d.int_part == 0);
  CHECK(d.frac_part == 0.0);
}

TEST_CASE("nearest split and tie direction") {
  CHECK(decompose(2.7).nearest_int == 3);
  CHECK(decompose(2.7).nearest_rem == 2.7 - 3.0);
  CHECK(decompose(-2.6).nearest_int == -3);

  // Half-integers round up, keeping the remainder in [-1/2, 1/2).
  CHECK(decompose(0.5).nearest_int == 1);
  CHECK(decompose(0.5).nearest_rem == -0.5);
  CHECK(decompose(-0.5).nearest_int == 0);
  CHECK(decompose(-0.5).nearest_rem == -0.5);
  CHECK(decompose(2.5).nearest_int == 3);
  CHECK(decompose(-3.5).nearest_int == -3);
  CHECK(decompose(-3.5).nearest_rem == -0.5);
}

TEST_CASE("boundary rounding near half-integers") {
  // Largest double below 1/2: x + 0.5 rounds to 1.0, the nudge must undo it.
  double x = std::nextafter(0.5, 0.0);
  Decomposition d = decompose(x);
  CHECK(d.nearest_int == 0);
  CHECK(d.nearest_rem == x);

  x = std::nextafter(0.5, 1.0);
  d = decompose(x);
  CHECK(d.nearest_int == 1);
  CHECK(d.nearest_rem == x - 1.0);

  x = std::nextafter(-0.5, -1.0);
  d = decompose(x);
  CHECK(d.nearest_int == -1);
  CHECK(d.nearest_rem == x + 1.0);
}

TEST_CASE("reconstruction and remainder ranges below 2^52") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  std::uniform_real_distribution<double> S(0.0, 50.0);
  for (int i = 0; i < 20000; ++i) {
    double x = U(rng) * std::exp2(S(rng));  // spread over many binades
    Decomposition d = decompose(x);
    CHECK(d.frac_part >= 0.0);
    CHECK(d.frac_part < 1.0);
    CHECK(d.centered >= -0.5);
    CHECK(d.centered < 0.5);
    CHECK(d.nearest_rem >= -0.5);
    CHECK(d.nearest_rem < 0.5);
    // x - m is always representable below 2^52, so the nearest split
    // reconstructs with no rounding at all.
    CHECK(static_cast<double>(d.nearest_int) + d.nearest_rem == x);
    // The floor split matches except for x in (-1, 0), where the true
    // remainder x + 1 can need more bits than a double holds; the
    // reconstruction is then off by at most one ulp of 1.
    double recon = static_cast<double>(d.int_part) + d.frac_part;
    if (x >= 0.0 || x <= -1.0) {
      CHECK(recon == x);
    } else {
      CHECK(std::fabs(recon - x) <= std::ldexp(1.0, -53));
    }
  }
}

TEST_CASE("integer shifts leave the remainders alone") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  std::uniform_int_distribution<int> K(-1000, 1000);
  for (int i = 0; i < 5000; ++i) {
    double x = U(rng) * 100.0;
    int k = K(rng);
    double shifted = x + static_cast<double>(k);
    if (shifted - static_cast<double>(k) != x) continue;  // shift not exact, skip
    Decomposition a = decompose(x);
    Decomposition b = decompose(shifted);
    CHECK(a.frac_part == b.frac_part);
    CHECK(a.nearest_rem == b.nearest_rem);
    CHECK(b.int_part - a.int_part == k);
    CHECK(b.nearest_int - a.nearest_int == k);
  }
}

TEST_CASE("rejects non-finite and oversized input") {
  CHECK_THROWS_AS(decompose(std::nan("")), std::domain_error);
  CHECK_THROWS_AS(decompose(HUGE_VAL), std::domain_error);
  CHECK_THROWS_AS(decompose(-HUGE_VAL), std::domain_error);
  CHECK_THROWS_AS(decompose(4.611686018427387904e18), std::domain_error);
  CHECK_THROWS_AS(decompose(-5e18), std::domain_error);
  CHECK_NOTHROW(decompose(4.6e18));
  CHECK(decompose(4.6e18).frac_part == 0.0);
}
