// Theta evaluation through the tau -> -1/tau lattice swap. For tau = i t the
// swap sends t -> 1/t, so the slowly-converging small-t regime of the
// trigonometric series becomes a rapidly-converging sum of Gaussians:
//
//   theta_1(v|it) = (-1)^{[v]}  t^{-1/2} SUM_n (-1)^n e^{-pi (n - ((v)))^2 / t}
//   theta_2(v|it) = (-1)^{m_v}  t^{-1/2} SUM_n (-1)^n e^{-pi (n - <<v>>)^2 / t}
//   theta_3(v|it) =             t^{-1/2} SUM_n        e^{-pi (n - <<v>>)^2 / t}
//   theta_4(v|it) =             t^{-1/2} SUM_n        e^{-pi (n - ((v)))^2 / t}
//
// with ((v)) the centered fractional part, <<v>> the nearest-integer
// remainder and m_v its integer. Writing w for the remainder and pulling the
// n = 0 Gaussian out front,
//
//   SUM_n = e^{-pi w^2 / t} * S,   S = SUM_n s_n e^{-pi n (n - 2w) / t},
//
// every exponent in S is <= 0 for |w| <= 1/2, so S is evaluated in plain
// doubles (S is O(1)) while the possibly-underflowing front factor rides in
// the ScaledReal log slot.
//
// S is summed in rings n = +-1, +-2, ...; before adding ring N the loop stops
// once the remaining terms are provably below tol:
//
//   |S - S_N| <= 2 e^{-pi (N^2 - 2 N |w|) / t} / (1 - e^{-pi (2N + 1 - 2|w|) / t})
//
// (first omitted exponent, then a geometric bound from increments
// 2n + 1 - 2|w| >= 2N + 1 - 2|w| > 0).

#pragma once

#include "theta_gauss/theta.hpp"

namespace theta_gauss {

// Which remainder convention a kind uses, the parity sign the shift picks up,
// and whether the lattice sum alternates.
struct LatticeArg {
  double w;        // ((v)) for kinds 1, 4; <<v>> for kinds 2, 3; in [-1/2, 1/2)
  int prefactor;   // (-1)^{[v]} for kind 1, (-1)^{m_v} for kind 2, else +1
  bool alternating;
};
LatticeArg lattice_argument(ThetaKind kind, double v);

// tol is relative to the leading Gaussian of the transformed sum.
EvalReport theta_transformed(ThetaKind kind, double v, double t, double tol);

// Series for t >= 1, transformed for t < 1; either side of the crossover
// needs only a handful of terms there.
EvalReport theta_auto(ThetaKind kind, double v, double t, double tol);

// Relative gap between the two evaluation routes at internal tolerance 1e-13;
// the denominator is floored by each route's leading-term scale so the measure
// stays meaningful at the zeros of theta_1 and theta_2.
double transform_identity_residual(ThetaKind kind, double v, double t);

namespace detail {
// Fixed ring-count transformed sum, for truncation-honesty tests.
ScaledReal theta_transformed_fixed(ThetaKind kind, double v, double t, std::int64_t rings);
}  // namespace detail

}  // namespace theta_gauss
