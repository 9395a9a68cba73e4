#include "theta_gauss/modular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "theta_gauss/frac.hpp"

namespace theta_gauss {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::int64_t kMaxRings = 10'000'000;

}  // namespace

LatticeArg lattice_argument(ThetaKind kind, double v) {
  Decomposition d = decompose(v);
  switch (kind) {
    case ThetaKind::Theta1:
      return {d.centered, (d.int_part & 1) ? -1 : 1, true};
    case ThetaKind::Theta2:
      return {d.nearest_rem, (d.nearest_int & 1) ? -1 : 1, true};
    case ThetaKind::Theta3:
      return {d.nearest_rem, 1, false};
    case ThetaKind::Theta4:
      return {d.centered, 1, false};
  }
  throw std::domain_error("theta_transformed: bad kind");
}

namespace {

void check_args(double v, double t, double tol, const char* who) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw std::domain_error(std::string(who) + ": t must be a finite positive real");
  }
  if (!std::isfinite(v)) throw std::domain_error(std::string(who) + ": v must be finite");
  if (!(tol > 0.0) || !(tol < 1.0)) {
    throw std::domain_error(std::string(who) + ": tol must lie in (0, 1)");
  }
}

}  // namespace

EvalReport theta_transformed(ThetaKind kind, double v, double t, double tol) {
  check_args(v, t, tol, "theta_transformed");

  const LatticeArg lat = lattice_argument(kind, v);
  const double w = lat.w;
  const double aw = std::fabs(w);

  EvalReport rep;
  rep.method = Method::Transformed;

  // Alternating sum with the remainder exactly at -1/2: terms n and -(n+1)
  // carry equal exponents and opposite signs, so S vanishes identically
  // (theta_1 at integer v, theta_2 at half-integer v). Returning the exact
  // zero beats summing rounded pairs to O(eps) noise.
  if (lat.alternating && w == -0.5) {
    rep.terms_used = 1;
    return rep;
  }

  const double ltol = std::log(tol);
  double S = 1.0;  // n = 0 term of the factored sum
  std::int64_t ring = 1;
  double stop_log;
  for (;;) {
    // Bound on everything from ring N outward: first omitted exponent plus a
    // geometric estimate with increments 2n + 1 - 2|w| >= 2N + 1 - 2|w|.
    double nn = static_cast<double>(ring);
    double first = kPi * (nn * nn - 2.0 * nn * aw) / t;
    double den = -std::expm1(-kPi * (2.0 * nn + 1.0 - 2.0 * aw) / t);
    stop_log = std::numbers::ln2 - first - std::log(den);
    if (stop_log < ltol) break;
    if (ring >= kMaxRings) {
      throw std::runtime_error("theta_transformed: truncation rule failed to trigger");
    }
    double s = (lat.alternating && (ring & 1)) ? -1.0 : 1.0;
    S += s * (std::exp(-kPi * nn * (nn - 2.0 * w) / t) +
              std::exp(-kPi * nn * (nn + 2.0 * w) / t));
    ++ring;
  }

  rep.terms_used = 2 * (ring - 1) + 1;
  const double front = -0.5 * std::log(t) - kPi * w * w / t;
  if (S != 0.0) {
    rep.value = ScaledReal::from_log(lat.prefactor * (S > 0.0 ? 1 : -1),
                                     front + std::log(std::fabs(S)));
  }
  rep.tail_bound = ScaledReal::from_log(1, front + stop_log);
  return rep;
}

EvalReport theta_auto(ThetaKind kind, double v, double t, double tol) {
  check_args(v, t, tol, "theta_auto");
  // q = e^{-pi t} against e^{-pi/t}: the series term budget wins at t >= 1,
  // the Gaussian lattice below.
  return t >= 1.0 ? theta_series(kind, v, t, tol) : theta_transformed(kind, v, t, tol);
}

double transform_identity_residual(ThetaKind kind, double v, double t) {
  if (!(t >= 0.05 && t <= 20.0)) {
    throw std::domain_error("transform_identity_residual: t must lie in [0.05, 20]");
  }
  constexpr double tol = 1e-13;
  const ScaledReal a = theta_series(kind, v, t, tol).value;
  const ScaledReal b = theta_transformed(kind, v, t, tol).value;

  const bool half = kind == ThetaKind::Theta1 || kind == ThetaKind::Theta2;
  const double series_scale = half ? std::numbers::ln2 - kPi * t * 0.25 : 0.0;
  const LatticeArg lat = lattice_argument(kind, v);
  const double trans_scale = -0.5 * std::log(t) - kPi * lat.w * lat.w / t;

  const ScaledReal diff = a - b;
  if (diff.is_zero()) return 0.0;
  const double denom_log = std::max({a.log_mag(), b.log_mag(), series_scale, trans_scale});
  return std::exp(diff.log_mag() - denom_log);
}

namespace detail {

ScaledReal theta_transformed_fixed(ThetaKind kind, double v, double t, std::int64_t rings) {
  check_args(v, t, 0.5, "theta_transformed_fixed");
  const LatticeArg lat = lattice_argument(kind, v);
  const double w = lat.w;
  if (lat.alternating && w == -0.5) return ScaledReal::zero();

  double S = 1.0;
  for (std::int64_t ring = 1; ring <= rings; ++ring) {
    double nn = static_cast<double>(ring);
    double s = (lat.alternating && (ring & 1)) ? -1.0 : 1.0;
    S += s * (std::exp(-kPi * nn * (nn - 2.0 * w) / t) +
              std::exp(-kPi * nn * (nn + 2.0 * w) / t));
  }
  if (S == 0.0) return ScaledReal::zero();
  const double front = -0.5 * std::log(t) - kPi * w * w / t;
  return ScaledReal::from_log(lat.prefactor * (S > 0.0 ? 1 : -1), front + std::log(std::fabs(S)));
}

}  // namespace detail

}  // namespace theta_gauss
