// Jacobi theta functions of a real argument v and purely imaginary lattice
// parameter tau = i*t, t > 0, through their q-series and triple products,
// q = e^{-pi t} in (0, 1):
//
//   theta_1(v|it) = 2 SUM_{n>=0} (-1)^n q^{(n+1/2)^2} sin((2n+1) pi v)
//   theta_2(v|it) = 2 SUM_{n>=0} q^{(n+1/2)^2} cos((2n+1) pi v)
//   theta_3(v|it) = 1 + 2 SUM_{n>=1} q^{n^2} cos(2 pi n v)
//   theta_4(v|it) = 1 + 2 SUM_{n>=1} (-1)^n q^{n^2} cos(2 pi n v)
//
// Values are returned as ScaledReal because the natural scale of kinds 1 and 2
// is 2 q^{1/4}, which underflows a double once t > ~2800 worth of log range is
// spent; more importantly downstream users multiply by factors like
// e^{pi x^2} that overflow on their own.
//
// Each evaluation reports a rigorous bound on the truncation error. For kinds
// 3 and 4 the terms beyond index N are dominated by the geometric series with
// ratio q^{2N+3}, giving |tail| <= 2 q^{(N+1)^2} / (1 - q^{2N+3}). Kinds 1, 2
// factor out 2 q^{1/4}; the inner exponents are n(n+1) and the same argument
// gives |tail| <= 2 q^{(N+1)(N+2)} / (1 - q^{2N+4}) on the inner sum. The
// stop rule compares this bound against tol times the leading-term scale, so
// tol is relative to the natural magnitude of the sum (effectively absolute
// near the zeros of theta_1).

#pragma once

#include <cstdint>

#include "theta_gauss/scaled.hpp"

namespace theta_gauss {

enum class ThetaKind : int { Theta1 = 1, Theta2 = 2, Theta3 = 3, Theta4 = 4 };

enum class Method { DirectSeries, Product, Transformed };

const char* method_name(Method m);  // "direct_series", "product", "transformed"

// Nome of the lattice parameter: q = e^{-pi t}. Kept as a named type so the
// 0 < q < 1 invariant has one owner. q underflows to 0.0 for t > ~236, where
// every series below has collapsed to its leading term anyway.
struct Nome {
  double q;
  double t;
  static Nome from_t(double t);  // throws std::domain_error unless 0 < t < inf
};

struct EvalReport {
  ScaledReal value;
  Method method = Method::DirectSeries;
  std::int64_t terms_used = 0;     // one-sided series terms, product factor groups, or lattice points
  ScaledReal tail_bound;           // rigorous bound on |true - value|, absolute scale
};

// Partial q-Pochhammer product (a; q)_inf = PROD_{k>=0} (1 - a q^k) for
// |q| < 1, truncated when the remaining factors provably move the value by
// less than tol (absolute). err_bound reports that bound.
struct QPochhammerResult {
  double value;
  double err_bound;
  std::int64_t factors_used;
};
QPochhammerResult q_pochhammer(double a, double q, double tol);

// Trigonometric series evaluation. tol is relative to the leading-term scale
// (1 for kinds 3, 4; 2 q^{1/4} for kinds 1, 2).
EvalReport theta_series(ThetaKind kind, double v, double t, double tol);

// Triple-product evaluation of the same function:
//   theta_1 = 2 q^{1/4} sin(pi v) PROD (1 - q^{2k}) (1 - 2 q^{2k} cos(2 pi v) + q^{4k})
//   theta_2 = 2 q^{1/4} cos(pi v) PROD (1 - q^{2k}) (1 + 2 q^{2k} cos(2 pi v) + q^{4k})
//   theta_3 =                     PROD (1 - q^{2k}) (1 + 2 q^{2k-1} cos(2 pi v) + q^{4k-2})
//   theta_4 =                     PROD (1 - q^{2k}) (1 - 2 q^{2k-1} cos(2 pi v) + q^{4k-2})
// Wholly independent code path from theta_series; the pair is the identity
// check the test suite leans on.
EvalReport theta_product(ThetaKind kind, double v, double t, double tol);

// Smallest bilateral lattice-term count 2N+1 whose series tail bound certifies
// |tail| <= exp(log_abs_tail) for the integer-exponent kinds at this t.
std::int64_t series_terms_for_tail(double t, double log_abs_tail);

namespace detail {
// Fixed-truncation series sum (same folding as theta_series, no stop rule),
// for truncation-honesty tests.
ScaledReal theta_series_fixed(ThetaKind kind, double v, double t, std::int64_t terms);
}  // namespace detail

}  // namespace theta_gauss
