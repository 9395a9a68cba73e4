// Sign + log-magnitude representation for reals whose magnitude can leave the
// double range (theta prefactors like e^{-pi w^2 / t} underflow near t ~ 1e-3
// while the quantities they multiply stay O(1)).
//
// A value is sign * exp(log_mag) with sign in {-1, 0, +1}. Zero is stored as
// sign 0 / log_mag -inf. Multiplication adds logs; addition pivots on the
// larger magnitude so the exp() calls see only arguments <= 0:
//
//   a + b = exp(p) * (sa * e^{la - p} + sb * e^{lb - p}),   p = max(la, lb)
//
// Exact cancellation of equal magnitudes yields the true zero, not log(0)
// noise. Rounding of log_mag costs ~ |log_mag| * eps relative error in the
// represented value, which is the usual price of log-domain storage.

#pragma once

#include <limits>

namespace theta_gauss {

class ScaledReal {
 public:
  struct ToPlain {
    double value;
    bool underflow;  // true value nonzero but rounds to 0.0
    bool overflow;   // magnitude above the double range
  };

  constexpr ScaledReal() = default;

  static ScaledReal zero() { return ScaledReal(); }
  static ScaledReal from_value(double x);
  // sign is normalized to {-1, 0, +1}; sign 0 forces log_mag to -inf.
  static ScaledReal from_log(int sign, double log_mag);

  int sign() const { return sign_; }
  double log_mag() const { return log_mag_; }
  bool is_zero() const { return sign_ == 0; }

  ScaledReal abs() const;
  ScaledReal operator-() const;

  double to_plain() const;
  ToPlain to_plain_checked() const;

 private:
  int sign_ = 0;
  double log_mag_ = -std::numeric_limits<double>::infinity();
};

ScaledReal mul(const ScaledReal& a, const ScaledReal& b);
ScaledReal add(const ScaledReal& a, const ScaledReal& b);

inline ScaledReal operator*(const ScaledReal& a, const ScaledReal& b) { return mul(a, b); }
inline ScaledReal operator+(const ScaledReal& a, const ScaledReal& b) { return add(a, b); }
inline ScaledReal operator-(const ScaledReal& a, const ScaledReal& b) { return add(a, -b); }

}  // namespace theta_gauss
