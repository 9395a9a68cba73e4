#include "theta_gauss/theta.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace theta_gauss {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::int64_t kMaxTerms = 10'000'000;

void check_t(double t, const char* who) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw std::domain_error(std::string(who) + ": t must be a finite positive real");
  }
}

void check_tol(double tol, const char* who) {
  if (!(tol > 0.0) || !(tol < 1.0)) {
    throw std::domain_error(std::string(who) + ": tol must lie in (0, 1)");
  }
}

[[noreturn]] void too_many_terms(const char* who) {
  throw std::runtime_error(std::string(who) + ": truncation rule failed to trigger");
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::DirectSeries: return "direct_series";
    case Method::Product: return "product";
    case Method::Transformed: return "transformed";
  }
  return "?";
}

Nome Nome::from_t(double t) {
  check_t(t, "Nome");
  return Nome{std::exp(-kPi * t), t};
}

QPochhammerResult q_pochhammer(double a, double q, double tol) {
  if (!(std::fabs(q) < 1.0)) {
    throw std::domain_error("q_pochhammer: |q| must be < 1");
  }
  check_tol(tol, "q_pochhammer");

  double value = 1.0;
  double qk = 1.0;  // q^k
  std::int64_t k = 0;
  for (;;) {
    value *= 1.0 - a * qk;
    qk *= q;
    ++k;
    // The factors not yet applied satisfy
    //   |PROD_{j>=k} (1 - a q^j) / 1 - 1| <= exp(SUM_{j>=k} |a| |q|^j) - 1,
    // and the geometric sum is |a| |q|^k / (1 - |q|).
    double s = std::fabs(a) * std::fabs(qk) / (1.0 - std::fabs(q));
    double err = std::expm1(s) * std::fabs(value);
    if (err < tol) return {value, err, k};
    if (k >= kMaxTerms) too_many_terms("q_pochhammer");
  }
}

EvalReport theta_series(ThetaKind kind, double v, double t, double tol) {
  check_t(t, "theta_series");
  check_tol(tol, "theta_series");
  if (!std::isfinite(v)) throw std::domain_error("theta_series: v must be finite");

  const Nome nome = Nome::from_t(t);
  const double q = nome.q;
  const double lnq = -kPi * t;  // exact by construction of the nome
  const double qsq = q * q;

  EvalReport rep;
  rep.method = Method::DirectSeries;

  if (kind == ThetaKind::Theta3 || kind == ThetaKind::Theta4) {
    double sum = 1.0;
    std::int64_t n = 0;   // last summed index
    double pw = q;        // q^{(n+1)^2}, weight of the next candidate term
    double qodd = q * qsq;  // q^{2n+3}
    for (;;) {
      double bound = pw == 0.0 ? 0.0 : 2.0 * pw / (1.0 - qodd);
      if (bound < tol) break;  // tol is relative to the leading term, 1
      ++n;
      if (n >= kMaxTerms) too_many_terms("theta_series");
      double c = std::cos(2.0 * kPi * static_cast<double>(n) * v);
      double s = (kind == ThetaKind::Theta4 && (n & 1)) ? -1.0 : 1.0;
      sum += 2.0 * s * pw * c;
      pw *= qodd;
      qodd *= qsq;
    }
    rep.value = ScaledReal::from_value(sum);
    rep.terms_used = n + 1;
    double np1 = static_cast<double>(n + 1);
    rep.tail_bound = ScaledReal::from_log(
        1, std::numbers::ln2 + np1 * np1 * lnq - std::log1p(-qodd));
    return rep;
  }

  // Kinds 1, 2: pull the half-integer exponent floor out front,
  //   theta = 2 q^{1/4} SUM_{n>=0} c_n q^{n(n+1)} trig((2n+1) pi v),
  // and run the stop rule on the inner sum, whose leading weight is 1.
  const bool is1 = kind == ThetaKind::Theta1;
  double inner = is1 ? std::sin(kPi * v) : std::cos(kPi * v);
  std::int64_t n = 0;
  double pw = qsq;          // q^{(n+1)(n+2)}
  double qstep = qsq * qsq;  // q^{2n+4}
  for (;;) {
    double bound = pw == 0.0 ? 0.0 : 2.0 * pw / (1.0 - qstep);
    if (bound < tol) break;
    ++n;
    if (n >= kMaxTerms) too_many_terms("theta_series");
    double arg = static_cast<double>(2 * n + 1) * kPi * v;
    double w = is1 ? std::sin(arg) : std::cos(arg);
    double c = (is1 && (n & 1)) ? -1.0 : 1.0;
    inner += c * pw * w;
    pw *= qstep;
    qstep *= qsq;
  }
  const double lead_log = std::numbers::ln2 + 0.25 * lnq;  // log(2 q^{1/4})
  rep.value = inner == 0.0
                  ? ScaledReal::zero()
                  : ScaledReal::from_log(inner > 0.0 ? 1 : -1,
                                         lead_log + std::log(std::fabs(inner)));
  rep.terms_used = n + 1;
  double np1 = static_cast<double>(n + 1);
  rep.tail_bound = ScaledReal::from_log(
      1, lead_log + np1 * (np1 + 1.0) * lnq - std::log1p(-qstep));
  return rep;
}

EvalReport theta_product(ThetaKind kind, double v, double t, double tol) {
  check_t(t, "theta_product");
  check_tol(tol, "theta_product");
  if (!std::isfinite(v)) throw std::domain_error("theta_product: v must be finite");

  const Nome nome = Nome::from_t(t);
  const double q = nome.q;
  const double lnq = -kPi * t;
  const double qsq = q * q;
  const double c2 = std::cos(2.0 * kPi * v);
  const bool half = kind == ThetaKind::Theta1 || kind == ThetaKind::Theta2;

  ScaledReal prefactor = ScaledReal::from_log(1, std::numbers::ln2 + 0.25 * lnq);
  if (kind == ThetaKind::Theta1) {
    prefactor = mul(prefactor, ScaledReal::from_value(std::sin(kPi * v)));
  } else if (kind == ThetaKind::Theta2) {
    prefactor = mul(prefactor, ScaledReal::from_value(std::cos(kPi * v)));
  } else {
    prefactor = ScaledReal::from_value(1.0);
  }

  // cos-factor sign: theta_1 and theta_4 take the minus branch.
  const double cs = (kind == ThetaKind::Theta1 || kind == ThetaKind::Theta4) ? -1.0 : 1.0;

  double prod = 1.0;
  double e2 = qsq;  // q^{2k}
  double o = q;     // q^{2k-1}
  std::int64_t k = 0;
  for (;;) {
    ++k;
    if (k >= kMaxTerms) too_many_terms("theta_product");
    double m = half ? e2 : o;  // modulation weight of the cos factor
    prod *= (1.0 - e2) * (1.0 + cs * 2.0 * m * c2 + m * m);
    // Unapplied factor groups j > k deviate from 1 by at most
    // q^{2j} + 2 q^{2j-1} + q^{4j-2} <= 4 q^{2j-1}; summing the geometric
    // series bounds the relative effect of everything still missing.
    double s = 4.0 * e2 * q / (1.0 - qsq);  // 4 q^{2k+1} / (1 - q^2)
    double rel = std::expm1(s);
    if (rel < tol) {
      EvalReport rep;
      rep.method = Method::Product;
      rep.value = mul(prefactor, ScaledReal::from_value(prod));
      rep.terms_used = k;
      rep.tail_bound = mul(rep.value.abs(), ScaledReal::from_value(rel));
      return rep;
    }
    e2 *= qsq;
    o *= qsq;
  }
}

std::int64_t series_terms_for_tail(double t, double log_abs_tail) {
  check_t(t, "series_terms_for_tail");
  const double lnq = -kPi * t;
  for (std::int64_t n = 0; n < kMaxTerms; ++n) {
    double np1 = static_cast<double>(n + 1);
    double qodd = std::exp(lnq * static_cast<double>(2 * n + 3));
    double logb = std::numbers::ln2 + np1 * np1 * lnq - std::log1p(-qodd);
    if (logb <= log_abs_tail) return 2 * n + 1;
  }
  too_many_terms("series_terms_for_tail");
}

namespace detail {

ScaledReal theta_series_fixed(ThetaKind kind, double v, double t, std::int64_t terms) {
  check_t(t, "theta_series_fixed");
  if (terms < 1) throw std::domain_error("theta_series_fixed: need at least one term");
  const Nome nome = Nome::from_t(t);
  const double q = nome.q;
  const double lnq = -kPi * t;
  const double qsq = q * q;

  if (kind == ThetaKind::Theta3 || kind == ThetaKind::Theta4) {
    double sum = 1.0;
    double pw = q;
    double qodd = q * qsq;
    for (std::int64_t n = 1; n < terms; ++n) {
      double c = std::cos(2.0 * kPi * static_cast<double>(n) * v);
      double s = (kind == ThetaKind::Theta4 && (n & 1)) ? -1.0 : 1.0;
      sum += 2.0 * s * pw * c;
      pw *= qodd;
      qodd *= qsq;
    }
    return ScaledReal::from_value(sum);
  }

  const bool is1 = kind == ThetaKind::Theta1;
  double inner = is1 ? std::sin(kPi * v) : std::cos(kPi * v);
  double pw = qsq;
  double qstep = qsq * qsq;
  for (std::int64_t n = 1; n < terms; ++n) {
    double arg = static_cast<double>(2 * n + 1) * kPi * v;
    double w = is1 ? std::sin(arg) : std::cos(arg);
    double c = (is1 && (n & 1)) ? -1.0 : 1.0;
    inner += c * pw * w;
    pw *= qstep;
    qstep *= qsq;
  }
  if (inner == 0.0) return ScaledReal::zero();
  return ScaledReal::from_log(inner > 0.0 ? 1 : -1,
                              std::numbers::ln2 + 0.25 * lnq + std::log(std::fabs(inner)));
}

}  // namespace detail

}  // namespace theta_gauss
