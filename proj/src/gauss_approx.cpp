#include "theta_gauss/gauss_approx.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

#include "theta_gauss/sweep.hpp"

namespace theta_gauss {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_alternating(ThetaKind kind) {
  return kind == ThetaKind::Theta1 || kind == ThetaKind::Theta2;
}

void check_t_positive(double t, const char* who) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw std::domain_error(std::string(who) + ": t must be a finite positive real");
  }
}

}  // namespace

double leading_expansion(ThetaKind kind, double w, double t) {
  check_t_positive(t, "leading_expansion");
  if (!(std::fabs(w) <= 0.5)) {
    throw std::domain_error("leading_expansion: |w| must be <= 1/2");
  }
  // 2 e^{-pi/t} cosh(2 pi w / t), split so each exponent stays <= 0.
  double A = std::exp(-kPi * (1.0 - 2.0 * w) / t);
  double B = std::exp(-kPi * (1.0 + 2.0 * w) / t);
  return is_alternating(kind) ? 1.0 - (A + B) : 1.0 + (A + B);
}

ScaledReal expansion_remainder_bound(double t, double a) {
  check_t_positive(t, "expansion_remainder_bound");
  if (!(a > t)) {
    throw std::domain_error("expansion_remainder_bound: requires 0 < t < a");
  }
  return ScaledReal::from_log(
      1, std::numbers::ln2 - 2.0 * kPi / t - std::log1p(-std::exp(-kPi / a)));
}

ExpansionReport expansion_check(ThetaKind kind, double v, double t, double a) {
  ExpansionReport rep;
  rep.bound = expansion_remainder_bound(t, a);  // validates t, a

  const LatticeArg lat = lattice_argument(kind, v);
  const double L = leading_expansion(kind, lat.w, t);

  // Undo the lattice normalization: prefactor * sqrt(t) e^{pi w^2/t} theta
  // equals L plus the remainder being measured.
  const EvalReport ev = theta_auto(kind, v, t, 1e-15);
  const ScaledReal unscale =
      ScaledReal::from_log(lat.prefactor, 0.5 * std::log(t) + kPi * lat.w * lat.w / t);
  const double m = mul(unscale, ev.value).to_plain();
  rep.measured = m - L;

  // Cancellation noise: m and L are O(1) doubles, their difference inherits
  // a few eps of absolute error, plus whatever the theta evaluation left
  // unsummed (mapped through the same normalization).
  constexpr double eps = 2.220446049250313e-16;
  rep.noise_estimate =
      4.0 * eps * (1.0 + std::fabs(L)) + mul(unscale, ev.tail_bound).abs().to_plain();

  const double bound_plain = rep.bound.to_plain();
  if (1000.0 * rep.noise_estimate > bound_plain) {
    rep.satisfied = std::nullopt;  // measurement floor too close to the bound
  } else {
    rep.satisfied = std::fabs(rep.measured) <= bound_plain * (1.0 + 1e-9);
  }
  return rep;
}

double gaussian_t_max(double C, double eps) {
  if (!(C > 0.0) || !std::isfinite(C)) {
    throw std::domain_error("gaussian_t_max: C must be a finite positive real");
  }
  if (!(eps > 0.0) || !(eps < 1.0)) {
    throw std::domain_error("gaussian_t_max: eps must lie strictly inside (0, 1)");
  }
  return eps * eps / (4.0 * kPi * kPi * C * C);
}

ScaledReal gaussian_error_bound(double t, double eps) {
  check_t_positive(t, "gaussian_error_bound");
  if (!(t < 1.0)) {
    throw std::domain_error("gaussian_error_bound: t must be < 1");
  }
  if (!(eps > 0.0) || !(eps < 1.0)) {
    throw std::domain_error("gaussian_error_bound: eps must lie in (0, 1)");
  }
  static const double logK =
      std::log((4.0 - 2.0 * std::exp(-kPi)) / (1.0 - std::exp(-kPi)));
  return ScaledReal::from_log(1, logK - (kPi - eps) / t);
}

GaussianApprox gaussian_approx(ThetaKind kind, double x, double t) {
  check_t_positive(t, "gaussian_approx");
  if (!(t < 1.0)) throw std::domain_error("gaussian_approx: t must be < 1");
  const double w = x * std::sqrt(t);
  if (!(std::fabs(w) < 0.5)) {
    throw std::domain_error("gaussian_approx: need |x| sqrt(t) < 1/2");
  }
  const bool shifted = kind == ThetaKind::Theta1 || kind == ThetaKind::Theta4;
  const double u = shifted ? 0.5 + w : w;
  GaussianApprox g;
  g.approx = mul(ScaledReal::from_log(1, 0.5 * std::log(t)),
                 theta_auto(kind, u, t, 1e-15).value);
  g.target = ScaledReal::from_log(1, -kPi * x * x);
  return g;
}

ScaledReal gaussian_remainder(ThetaKind kind, double x, double t) {
  check_t_positive(t, "gaussian_remainder");
  const double w = x * std::sqrt(t);
  const double a = std::fabs(w);
  if (!(a < 0.5)) {
    throw std::domain_error("gaussian_remainder: need |x| sqrt(t) < 1/2");
  }

  // R = SUM_{n != 0} s_n e^{-pi n (n - 2w)/t}. Factor out the nearest
  // lattice exponent base = pi (1 - 2|w|)/t; relative exponents come out as
  // products ((n-1)(n+1-2|w|) near side, (n+1)(n-1+2|w|) far side), so no
  // large cancelling terms are ever formed.
  const bool alt = is_alternating(kind);
  const double base = kPi * (1.0 - 2.0 * a) / t;
  double acc = 0.0;
  for (std::int64_t n = 1;; ++n) {
    double nn = static_cast<double>(n);
    double near = kPi * (nn - 1.0) * (nn + 1.0 - 2.0 * a) / t;
    double far = kPi * (nn + 1.0) * (nn - 1.0 + 2.0 * a) / t;
    if (near > 50.0 && far > 50.0) break;  // below ~2e-22 of the leading term
    double s = (alt && (n & 1)) ? -1.0 : 1.0;
    acc += s * (std::exp(-near) + std::exp(-far));
    if (n >= 10'000'000) {
      throw std::runtime_error("gaussian_remainder: lattice sum failed to converge");
    }
  }
  if (acc == 0.0) return ScaledReal::zero();
  return ScaledReal::from_log(acc > 0.0 ? 1 : -1, -base + std::log(std::fabs(acc)));
}

CertificationReport certify(ThetaKind kind, double C, double eps,
                            const std::vector<double>& t_values, std::int64_t x_count,
                            Exec exec) {
  const double tmax = gaussian_t_max(C, eps);  // validates C, eps
  if (t_values.empty()) throw std::domain_error("certify: t list must be nonempty");
  if (x_count < 2) throw std::domain_error("certify: x_count must be >= 2");
  for (double t : t_values) {
    check_t_positive(t, "certify");
    if (t >= tmax) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "t=%.6g >= t_max=%.6g for C=%g, eps=%g", t, tmax, C, eps);
      throw std::domain_error(buf);
    }
    if (t >= 1.0) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "t=%.6g >= 1; certification requires t < 1", t);
      throw std::domain_error(buf);
    }
  }

  CertificationReport rep;
  rep.kind = kind;
  rep.C = C;
  rep.eps = eps;
  rep.t_values = t_values;
  rep.sup_measured = remainder_sups(kind, C, t_values, x_count, exec);
  rep.all_pass = true;
  for (std::size_t i = 0; i < t_values.size(); ++i) {
    rep.bounds.push_back(gaussian_error_bound(t_values[i], eps));
    bool ok = rep.sup_measured[i].log_mag() <= rep.bounds[i].log_mag();
    rep.all_pass = rep.all_pass && ok;
  }

  // Decay rate of the sup against 1/t; the uniform bound predicts a slope
  // between -(pi) and -(pi - eps).
  if (t_values.size() >= 2) {
    double zm = 0.0, ym = 0.0;
    const std::size_t n = t_values.size();
    for (std::size_t i = 0; i < n; ++i) {
      zm += 1.0 / t_values[i];
      ym += rep.sup_measured[i].log_mag();
    }
    zm /= static_cast<double>(n);
    ym /= static_cast<double>(n);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double dz = 1.0 / t_values[i] - zm;
      num += dz * (rep.sup_measured[i].log_mag() - ym);
      den += dz * dz;
    }
    rep.decay_slope = den > 0.0 ? num / den : 0.0;
  }
  return rep;
}

}  // namespace theta_gauss
