#include "theta_gauss/scaled.hpp"

#include <cmath>
#include <stdexcept>

namespace theta_gauss {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

ScaledReal ScaledReal::from_value(double x) {
  if (std::isnan(x)) throw std::domain_error("ScaledReal: NaN input");
  ScaledReal r;
  if (x == 0.0) return r;
  r.sign_ = x > 0.0 ? 1 : -1;
  r.log_mag_ = std::log(std::fabs(x));  // +inf input gives log_mag +inf, a faithful overflow
  return r;
}

ScaledReal ScaledReal::from_log(int sign, double log_mag) {
  if (std::isnan(log_mag)) throw std::domain_error("ScaledReal: NaN log magnitude");
  ScaledReal r;
  if (sign == 0 || log_mag == kNegInf) return r;
  r.sign_ = sign > 0 ? 1 : -1;
  r.log_mag_ = log_mag;
  return r;
}

ScaledReal ScaledReal::abs() const {
  ScaledReal r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

ScaledReal ScaledReal::operator-() const {
  ScaledReal r = *this;
  r.sign_ = -r.sign_;
  return r;
}

double ScaledReal::to_plain() const {
  if (sign_ == 0) return 0.0;
  return sign_ * std::exp(log_mag_);
}

ScaledReal::ToPlain ScaledReal::to_plain_checked() const {
  ToPlain r{to_plain(), false, false};
  if (sign_ != 0 && r.value == 0.0) r.underflow = true;
  if (std::isinf(r.value)) r.overflow = true;
  return r;
}

ScaledReal mul(const ScaledReal& a, const ScaledReal& b) {
  if (a.is_zero() || b.is_zero()) return ScaledReal::zero();
  return ScaledReal::from_log(a.sign() * b.sign(), a.log_mag() + b.log_mag());
}

ScaledReal add(const ScaledReal& a, const ScaledReal& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // Pivot on the larger magnitude: both exp arguments are <= 0, so neither
  // can overflow and the small side degrades gracefully to 0.
  double p = a.log_mag() >= b.log_mag() ? a.log_mag() : b.log_mag();
  double s = a.sign() * std::exp(a.log_mag() - p) + b.sign() * std::exp(b.log_mag() - p);
  if (s == 0.0) return ScaledReal::zero();
  return ScaledReal::from_log(s > 0.0 ? 1 : -1, p + std::log(std::fabs(s)));
}

}  // namespace theta_gauss
