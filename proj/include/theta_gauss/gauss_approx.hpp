// Theta functions as uniform approximations of the Gaussian.
//
// Push the argument through the transformed route and strip the lattice
// factor: with w the (kind-appropriate) remainder of the evaluation point,
//
//   sqrt(t) e^{pi w^2 / t} theta_j = L_j(w, t) + R,
//   L_j = 1 -+ 2 e^{-pi/t} cosh(2 pi w / t)     ('-' for j = 1, 2)
//
// and the leftover R collects lattice points |n| >= 2, so
//
//   |R| <= 2 e^{-2 pi / t} / (1 - e^{-pi/a})        for 0 < t < a.
//
// Specializing w = sqrt(t) x turns theta into a Gaussian approximation: for
// kinds 1, 4 (argument shifted by 1/2) define
//
//   G_j(x, t) = prefactor * sqrt(t) e^{pi w^2 / t} ... collapsed:
//   G_j(x, t) = sqrt(t) theta_j(u | it) e^{pi x^2},  u = 1/2 + sqrt(t) x  (j = 1, 4)
//                                                    u = sqrt(t) x        (j = 2, 3)
//
// then G_j = 1 + R_2j(x, t) with, for |x| < 1/(2 sqrt(t)),
//
//   R_2j(x, t) = SUM_{n != 0} s_n e^{-pi n (n - 2 sqrt(t) x) / t},
//   s_n = (-1)^n for j = 1, 2 and 1 for j = 3, 4,
//
// so theta approaches the Gaussian e^{-pi x^2} uniformly as t -> 0. The
// remainder obeys |R_2j| <= K e^{-(pi - eps)/t} with
// K = (4 - 2 e^{-pi}) / (1 - e^{-pi}) for any eps in (0, 1) once
// t < t_max(C, eps) = eps^2 / (4 pi^2 C^2), uniformly over |x| <= C.
//
// certify() measures sup |R_2j| over an x-grid per t and checks it against
// that bound; the remainder is evaluated analytically in log space (exponent
// of the nearest lattice point factored out), so sups far below double
// underflow are still exact to ~1e-12 relative.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "theta_gauss/modular.hpp"
#include "theta_gauss/parallel.hpp"
#include "theta_gauss/scaled.hpp"
#include "theta_gauss/theta.hpp"

namespace theta_gauss {

// L_j(w, t) for the kind's remainder convention; |w| <= 1/2, t > 0.
double leading_expansion(ThetaKind kind, double w, double t);

// 2 e^{-2 pi / t} / (1 - e^{-pi / a}), valid for 0 < t < a.
ScaledReal expansion_remainder_bound(double t, double a);

struct ExpansionReport {
  double measured;                 // sqrt(t) e^{pi w^2/t} |theta| - L, sign included
  ScaledReal bound;                // expansion_remainder_bound(t, a)
  double noise_estimate;           // float64 cancellation scale of `measured`
  std::optional<bool> satisfied;   // nullopt when noise swamps the bound
};

// Measures the expansion remainder at (v, t) and compares against the bound.
// Indeterminate (nullopt) when the bound sits within 3 decades of the
// cancellation noise of the double-precision measurement.
ExpansionReport expansion_check(ThetaKind kind, double v, double t, double a);

// eps^2 / (4 pi^2 C^2); requires C > 0, 0 < eps < 1. Callers must keep
// t < min(t_max, 1).
double gaussian_t_max(double C, double eps);

// K e^{-(pi - eps)/t}, K = (4 - 2 e^{-pi}) / (1 - e^{-pi}); requires
// 0 < t < 1 and 0 < eps < 1.
ScaledReal gaussian_error_bound(double t, double eps);

struct GaussianApprox {
  ScaledReal approx;  // sqrt(t) theta_j(u | it)
  ScaledReal target;  // e^{-pi x^2}; approx/target - 1 = R_2j(x, t)
};

// The theta-based Gaussian approximant at x for scale t in (0, 1).
GaussianApprox gaussian_approx(ThetaKind kind, double x, double t);

// R_2j(x, t) = approx/target - 1, evaluated analytically in log space from
// the lattice sum; exact sign, ~1e-12 relative accuracy, no underflow.
// Requires |x| < 1/(2 sqrt(t)).
ScaledReal gaussian_remainder(ThetaKind kind, double x, double t);

struct CertificationReport {
  ThetaKind kind = ThetaKind::Theta3;
  double C = 0.0;
  double eps = 0.0;
  std::vector<double> t_values;
  std::vector<ScaledReal> sup_measured;  // per t, sup over the x-grid of |R_2j|
  std::vector<ScaledReal> bounds;        // per t, gaussian_error_bound(t, eps)
  bool all_pass = false;
  double decay_slope = 0.0;  // d log sup / d (1/t), least squares over the t list
};

// Sweeps |x| <= C on a uniform grid per t and certifies sup |R_2j| against
// the uniform bound. Each t must satisfy t < min(t_max(C, eps), 1).
CertificationReport certify(ThetaKind kind, double C, double eps,
                            const std::vector<double>& t_values, std::int64_t x_count,
                            Exec exec = Exec::Parallel);

}  // namespace theta_gauss
