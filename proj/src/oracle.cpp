#include "theta_gauss/oracle.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <stdexcept>

namespace theta_gauss {

namespace {

namespace mp = boost::multiprecision;
using Real50 = mp::cpp_bin_float_50;
using Real130 = mp::number<mp::cpp_bin_float<130>>;

constexpr double kPi = 3.14159265358979323846;
constexpr double kLn10 = 2.30258509299404568402;

void check_oracle_args(double v, double t, int digits) {
  if (digits < 20 || digits > 100) {
    throw std::domain_error("oracle: digits must lie in [20, 100]");
  }
  if (!(t >= 1e-6) || !std::isfinite(t)) {
    throw std::domain_error("oracle: t must lie in [1e-6, inf)");
  }
  if (!std::isfinite(v)) throw std::domain_error("oracle: v must be finite");
}

// The series are 1-periodic up to a sign: shifting v by 1 multiplies kinds
// 1 and 2 by -1 (each trig argument moves by an odd multiple of pi) and
// leaves kinds 3 and 4 unchanged. Reducing to {v} in [0,1) before summing
// keeps the multiprecision trig arguments small and makes the lattice zeros
// (kind 1 at integers, kind 2 at half-integers) exact instead of ~1e-50
// rounding noise of sin(n pi).
struct ReducedArg {
  double fr;     // {v} in [0, 1)
  int sign;      // (-1)^{[v]} for kinds 1, 2; +1 otherwise
};

ReducedArg reduce_argument(ThetaKind kind, double v) {
  double fl = std::floor(v);
  double fr = v - fl;
  if (fr >= 1.0) {  // rounding of v - floor(v) for tiny negative v
    fr -= 1.0;
    fl += 1.0;
  }
  int sign = 1;
  if (kind == ThetaKind::Theta1 || kind == ThetaKind::Theta2) {
    if (std::fabs(std::fmod(fl, 2.0)) == 1.0) sign = -1;
  }
  return {fr, sign};
}

// Decimal digits lost to cancellation when the lattice sits close to the
// argument: the direct series adds O(1) oscillating terms while the true
// value is ~ t^{-1/2} e^{-pi w^2 / t}, w the distance to the kind's nearest
// vanishing-scale lattice point. Working precision must cover this gap.
double cancellation_digits(ThetaKind kind, double fr, double t) {
  if (t >= 1.0) return 0.0;
  double w;
  if (kind == ThetaKind::Theta1 || kind == ThetaKind::Theta4) {
    w = fr - 0.5;
  } else {
    w = fr <= 0.5 ? fr : fr - 1.0;
  }
  return kPi * w * w / (t * kLn10);
}

// One bilateral term of each series:
//   kind 1: (-1)^n q^{(n+1/2)^2} sin((2n+1) pi v)
//   kind 2:        q^{(n+1/2)^2} cos((2n+1) pi v)
//   kind 3:        q^{n^2}       cos(2 pi n v)
//   kind 4: (-1)^n q^{n^2}       cos(2 pi n v)
// summed over n in [-N, N]; the half-integer kinds pair n with -(n+1), the
// integer kinds n with -n, so the bilateral window is symmetric enough for
// the tail bounds below.
template <class Real>
Real term(ThetaKind kind, const Real& lnq, const Real& piv, long n) {
  const bool half = kind == ThetaKind::Theta1 || kind == ThetaKind::Theta2;
  Real e;
  if (half) {
    Real h = Real(2 * n + 1) / 2;  // n + 1/2, exact
    e = h * h;
  } else {
    e = Real(n) * Real(n);
  }
  Real mag = exp(lnq * e);
  Real osc;
  if (kind == ThetaKind::Theta1) {
    osc = sin(Real(2 * n + 1) * piv);
  } else if (kind == ThetaKind::Theta2) {
    osc = cos(Real(2 * n + 1) * piv);
  } else {
    osc = cos(Real(2 * n) * piv);
  }
  Real alt = ((kind == ThetaKind::Theta1 || kind == ThetaKind::Theta4) && (n & 1L))
                 ? Real(-1)
                 : Real(1);
  // (-1)^n with n < 0: parity of |n| is the same, covered by the & 1 above
  // because two's complement keeps the low bit.
  return alt * mag * osc;
}

template <class Real>
struct Summed {
  Real value;
  Real abs_sum;
};

// Literal bilateral sum out to +-N with N chosen by the tail rules:
//   integer kinds:      |tail| <= 2 q^{(N+1)^2}   / (1 - q^{2N+3})
//   half-integer kinds: |tail| <= 2 q^{(N+1/2)^2} / (1 - q^{2N+2})
// Primary stop: tail <= 10^-digits * |partial|. Safety stop at the backend's
// own noise floor, so an unforeseen cancellation terminates instead of
// chasing an unreachable relative target.
template <class Real>
Summed<Real> bilateral_sum(ThetaKind kind, const Real& v, double t, int digits) {
  const Real pi = boost::math::constants::pi<Real>();
  const Real lnq = -pi * Real(t);
  const Real piv = pi * v;
  const bool half = kind == ThetaKind::Theta1 || kind == ThetaKind::Theta2;

  const Real primary = pow(Real(10), -digits);
  const Real safety = pow(Real(10), -(std::numeric_limits<Real>::digits10 - 5));
  const Real lead = half ? exp(lnq / 4) : Real(1);

  Summed<Real> s{term(kind, lnq, piv, 0L), Real(0)};
  s.abs_sum = abs(s.value);
  for (long N = 0;; ++N) {
    Real tail;
    if (half) {
      Real h = Real(2 * N + 3) / 2;  // N + 1 + 1/2
      tail = 2 * exp(lnq * h * h) / (1 - exp(lnq * Real(2 * N + 2)));
    } else {
      tail = 2 * exp(lnq * Real(N + 1) * Real(N + 1)) / (1 - exp(lnq * Real(2 * N + 3)));
    }
    Real anchor = s.abs_sum > lead ? s.abs_sum : lead;
    if (tail <= primary * abs(s.value) || tail <= safety * anchor) return s;
    if (N > 100000) throw std::runtime_error("oracle: tail rule failed to trigger");
    long k = N + 1;
    Real tp = term(kind, lnq, piv, k);
    Real tm = term(kind, lnq, piv, -k);
    s.value += tp + tm;
    s.abs_sum += abs(tp) + abs(tm);
  }
}

OracleResult zero_result() {
  OracleResult r;
  r.sign = 0;
  r.log_abs = -std::numeric_limits<double>::infinity();
  r.value = 0.0;
  r.decimal = "0";
  return r;
}

template <class Real>
OracleResult oracle_impl(ThetaKind kind, double fr, int pre_sign, double t, int digits) {
  Summed<Real> s = bilateral_sum<Real>(kind, Real(fr), t, digits);
  if (pre_sign < 0) s.value = -s.value;
  if (s.value == 0) return zero_result();
  OracleResult r;
  r.sign = s.value > 0 ? 1 : -1;
  r.log_abs = static_cast<double>(log(abs(s.value)));
  r.value = static_cast<double>(s.value);
  r.decimal = s.value.str(digits, std::ios_base::scientific);
  return r;
}

bool is_lattice_zero(ThetaKind kind, double fr) {
  return (kind == ThetaKind::Theta1 && fr == 0.0) ||
         (kind == ThetaKind::Theta2 && fr == 0.5);
}

template <class Real>
double remainder_impl(ThetaKind kind, double x, double t, int digits) {
  const Real pi = boost::math::constants::pi<Real>();
  const Real w = Real(x) * sqrt(Real(t));
  const bool shifted = kind == ThetaKind::Theta1 || kind == ThetaKind::Theta4;
  const Real u = shifted ? Real(1) / 2 + w : w;
  // theta evaluated at the exact u, then scaled; the precision budget below
  // keeps the final double-rounded remainder honest even when R ~ 1e-14.
  Summed<Real> s = bilateral_sum<Real>(kind, u, t, digits);
  Real g = sqrt(Real(t)) * s.value * exp(pi * Real(x) * Real(x)) - 1;
  return static_cast<double>(g);
}

}  // namespace

OracleResult oracle_theta(ThetaKind kind, double v, double t, int digits) {
  check_oracle_args(v, t, digits);
  const ReducedArg red = reduce_argument(kind, v);
  if (is_lattice_zero(kind, red.fr)) return zero_result();
  const double need = digits + cancellation_digits(kind, red.fr, t) + 12.0;
  if (need <= 50.0) return oracle_impl<Real50>(kind, red.fr, red.sign, t, digits);
  if (need <= 130.0) return oracle_impl<Real130>(kind, red.fr, red.sign, t, digits);
  throw std::domain_error(
      "oracle: cancellation at this (v, t) exceeds the backend's working precision");
}

double oracle_agreement(ThetaKind kind, double v, double t, int d1, int d2) {
  check_oracle_args(v, t, d1);
  check_oracle_args(v, t, d2);
  const ReducedArg red = reduce_argument(kind, v);
  if (is_lattice_zero(kind, red.fr)) return 0.0;
  // The gap itself must be formed above double precision or it would bottom
  // out at ~1e-16; promote both runs to the wide backend and divide there.
  auto run = [&](int digits) -> Real130 {
    const double need = digits + cancellation_digits(kind, red.fr, t) + 12.0;
    if (need <= 50.0) {
      return Real130(bilateral_sum<Real50>(kind, Real50(red.fr), t, digits).value);
    }
    if (need <= 130.0) {
      return bilateral_sum<Real130>(kind, Real130(red.fr), t, digits).value;
    }
    throw std::domain_error(
        "oracle: cancellation at this (v, t) exceeds the backend's working precision");
  };
  const Real130 a = run(d1);
  const Real130 b = run(d2);
  if (a == 0 && b == 0) return 0.0;
  if (a == 0 || b == 0 || (a > 0) != (b > 0)) return 1.0;
  return static_cast<double>(abs(a / b - 1));
}

double oracle_gaussian_remainder(ThetaKind kind, double x, double t, int digits) {
  check_oracle_args(x, t, digits);
  const double aw = std::fabs(x) * std::sqrt(t);
  if (!(aw < 0.5)) {
    throw std::domain_error("oracle: need |x| sqrt(t) < 1/2");
  }
  // Two cancellations stack: the theta sum collapses to its lattice scale
  // e^{-pi w^2/t}, then subtracting 1 digs down to R ~ e^{-pi(1-2|w|)/t};
  // together pi (1-|w|)^2 / t of headroom in logs.
  const double need = digits + kPi * (1.0 - aw) * (1.0 - aw) / (t * kLn10) + 12.0;
  if (need <= 50.0) return remainder_impl<Real50>(kind, x, t, digits);
  if (need <= 130.0) return remainder_impl<Real130>(kind, x, t, digits);
  throw std::domain_error(
      "oracle: cancellation at this (x, t) exceeds the backend's working precision");
}

}  // namespace theta_gauss
