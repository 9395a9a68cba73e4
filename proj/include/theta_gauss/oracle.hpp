// High-precision reference evaluations, deliberately sharing no code with the
// fast path: literal bilateral sums, every term built from scratch with
// multiprecision exp/trig, truncated by per-kind geometric tail bounds. Used
// only by tests and the CLI's cross-check plumbing; nothing in the evaluation
// modules depends on this header.

#pragma once

#include <string>

#include "theta_gauss/theta.hpp"

namespace theta_gauss {

struct OracleResult {
  int sign;             // -1, 0, +1
  double log_abs;       // natural log of |value|, -inf for zero
  double value;         // double rounding of the value (0/inf on under/overflow)
  std::string decimal;  // decimal rendering at the requested digit count
};

// digits in [20, 100]; t >= 1e-6 (smaller t is refused, the Gaussian lattice
// there needs more working precision than the backend carries).
OracleResult oracle_theta(ThetaKind kind, double v, double t, int digits);

// Relative gap between two digit settings of the oracle itself; ~10^-min(d1,d2)
// when everything is healthy.
double oracle_agreement(ThetaKind kind, double v, double t, int d1, int d2);

// Brute-force R_2j(x, t) = sqrt(t) theta_j(u|it) e^{pi x^2} - 1 at high
// precision, the independent check on the analytic log-space remainder.
double oracle_gaussian_remainder(ThetaKind kind, double x, double t, int digits);

}  // namespace theta_gauss
