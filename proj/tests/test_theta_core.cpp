#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "theta_gauss/theta.hpp"

using namespace theta_gauss;

namespace {

// Relative gap with the denominator floored at the kind's leading-term scale,
// so the measure stays meaningful where theta_1/theta_2 vanish.
double scaled_gap(ThetaKind kind, double t, const ScaledReal& a, const ScaledReal& b) {
  const bool half = kind == ThetaKind::Theta1 || kind == ThetaKind::Theta2;
  double scale_log = half ? std::log(2.0) - std::numbers::pi * t / 4.0 : 0.0;
  ScaledReal d = a - b;
  if (d.is_zero()) return 0.0;
  double denom = std::max({a.log_mag(), b.log_mag(), scale_log});
  return std::exp(d.log_mag() - denom);
}

const std::vector<ThetaKind> kKinds = {ThetaKind::Theta1, ThetaKind::Theta2,
                                       ThetaKind::Theta3, ThetaKind::Theta4};

}  // namespace

TEST_CASE("q_pochhammer basics") {
  auto r = q_pochhammer(0.0, 0.9, 1e-12);
  CHECK(r.value == 1.0);
  CHECK(r.factors_used == 1);
  CHECK(r.err_bound == 0.0);

  r = q_pochhammer(1.0, 0.5, 1e-12);
  CHECK(r.value == 0.0);  // first factor is exactly zero
  CHECK(r.factors_used == 1);

  r = q_pochhammer(0.5, 0.5, 1e-12);
  CHECK(r.value == doctest::Approx(0.2887880950866024).epsilon(5e-12));
  CHECK(r.err_bound < 1e-12);
  CHECK(r.factors_used >= 35);
  CHECK(r.factors_used <= 50);

  // Negative nome alternates factors above and below one.
  r = q_pochhammer(0.5, -0.5, 1e-12);
  CHECK(r.value == doctest::Approx(0.5686989462654285).epsilon(5e-12));

  r = q_pochhammer(0.3, 0.9, 1e-10);
  CHECK(r.value == doctest::Approx(0.03772372965197721).epsilon(1e-8));

  CHECK(q_pochhammer(0.5, 0.5, 1e-3).factors_used <=
        q_pochhammer(0.5, 0.5, 1e-12).factors_used);

  CHECK_THROWS_AS(q_pochhammer(0.5, 1.0, 1e-9), std::domain_error);
  CHECK_THROWS_AS(q_pochhammer(0.5, -1.0, 1e-9), std::domain_error);
  CHECK_THROWS_AS(q_pochhammer(0.5, 0.5, 0.0), std::domain_error);
}

TEST_CASE("nome validation") {
  CHECK(Nome::from_t(1.0).q == doctest::Approx(std::exp(-std::numbers::pi)));
  CHECK(Nome::from_t(1e-6).q < 1.0);
  CHECK(Nome::from_t(1e-6).q > 0.0);
  CHECK_THROWS_AS(Nome::from_t(0.0), std::domain_error);
  CHECK_THROWS_AS(Nome::from_t(-2.0), std::domain_error);
  CHECK_THROWS_AS(Nome::from_t(HUGE_VAL), std::domain_error);
}

TEST_CASE("theta_series frozen values") {
  // Fast-decaying alternating partial sums pin these to full precision.
  EvalReport r = theta_series(ThetaKind::Theta3, 0.0, 1.0, 1e-13);
  CHECK(r.value.to_plain() == doctest::Approx(1.0864348112133080).epsilon(1e-13));
  CHECK(r.terms_used <= 6);
  CHECK(r.method == Method::DirectSeries);

  r = theta_series(ThetaKind::Theta2, 0.0, 1.0, 1e-13);
  CHECK(r.value.to_plain() == doctest::Approx(0.9135791381561168).epsilon(1e-12));

  r = theta_series(ThetaKind::Theta4, 0.0, 1.0, 1e-13);
  CHECK(r.value.to_plain() == doctest::Approx(0.9135791381561168).epsilon(1e-12));

  r = theta_series(ThetaKind::Theta3, 0.13, 2.0, 1e-13);
  CHECK(r.value.to_plain() == doctest::Approx(1.0025567050334293).epsilon(1e-13));

  r = theta_series(ThetaKind::Theta1, 0.37, 0.22, 1e-13);
  CHECK(r.value.to_plain() == doctest::Approx(1.6748216257864802).epsilon(1e-12));

  // theta_1 at v = 1/2 collapses onto theta_2 at 0: sin((2n+1)pi/2) = (-1)^n
  // cancels the alternating sign.
  ScaledReal a = theta_series(ThetaKind::Theta1, 0.5, 1.0, 1e-13).value;
  ScaledReal b = theta_series(ThetaKind::Theta2, 0.0, 1.0, 1e-13).value;
  CHECK(a.sign() == b.sign());
  CHECK(a.log_mag() == doctest::Approx(b.log_mag()).epsilon(1e-14));

  CHECK(theta_series(ThetaKind::Theta1, 0.0, 1.0, 1e-13).value.is_zero());
}

TEST_CASE("series tail bound is honest") {
  for (ThetaKind kind : kKinds) {
    for (double v : {0.0, 0.3, 0.5, -1.7}) {
      for (double t : {0.3, 0.7, 1.5}) {
        for (double tol : {1e-6, 1e-9}) {
          EvalReport r = theta_series(kind, v, t, tol);
          ScaledReal ref = detail::theta_series_fixed(kind, v, t, r.terms_used + 25);
          ScaledReal d = r.value - ref;
          if (d.is_zero()) continue;
          // Everything the stop rule left out must fit under its bound.
          CHECK(d.log_mag() <= r.tail_bound.log_mag() + 1e-9);
        }
      }
    }
  }
}

TEST_CASE("series terms respond to tol and stay minimal") {
  EvalReport loose = theta_series(ThetaKind::Theta3, 0.2, 0.5, 1e-3);
  EvalReport tight = theta_series(ThetaKind::Theta3, 0.2, 0.5, 1e-12);
  CHECK(loose.terms_used <= tight.terms_used);
  CHECK(loose.terms_used >= 1);

  // Large t: the leading term is the whole story.
  EvalReport big = theta_series(ThetaKind::Theta3, 0.2, 240.0, 1e-12);
  CHECK(big.terms_used == 1);
  CHECK(big.value.to_plain() == 1.0);
  CHECK(big.tail_bound.log_mag() < -700.0);

  for (ThetaKind kind : kKinds) {
    CHECK(theta_series(kind, 0.4, 1.0, 1e-13).tail_bound.sign() == 1);
  }
}

TEST_CASE("product and series agree across kinds") {
  for (ThetaKind kind : kKinds) {
    for (double v : {-2.0, -0.5, 0.0, 0.25, 0.3, 0.5, 0.77, 1.0, 2.3}) {
      for (double t : {0.25, 0.6, 1.0, 3.0}) {
        EvalReport s = theta_series(kind, v, t, 1e-13);
        EvalReport p = theta_product(kind, v, t, 1e-13);
        CHECK(p.method == Method::Product);
        double gap = scaled_gap(kind, t, s.value, p.value);
        INFO("kind ", static_cast<int>(kind), " v ", v, " t ", t, " gap ", gap);
        CHECK(gap <= 2e-12);
      }
    }
  }
}

TEST_CASE("product structure") {
  // Exact zero of theta_1 at v = 0 comes from the sin prefactor.
  CHECK(theta_product(ThetaKind::Theta1, 0.0, 1.0, 1e-12).value.is_zero());
  // theta_2 zero at v = 1/2 via the cos prefactor.
  CHECK(theta_product(ThetaKind::Theta2, 0.5, 1.0, 1e-12).value.to_plain() ==
        doctest::Approx(0.0).epsilon(1e-16));
  CHECK(theta_product(ThetaKind::Theta3, 0.2, 2.0, 1e-12).terms_used >= 1);
  CHECK(theta_product(ThetaKind::Theta3, 0.2, 0.1, 1e-3).terms_used <=
        theta_product(ThetaKind::Theta3, 0.2, 0.1, 1e-12).terms_used);
}

TEST_CASE("series term count helper matches the stop rule") {
  // The helper answers: how many bilateral lattice terms certify a given
  // absolute tail for the integer-exponent kinds.
  EvalReport r = theta_series(ThetaKind::Theta3, 0.3, 0.8, 1e-10);
  std::int64_t n = series_terms_for_tail(0.8, r.tail_bound.log_mag());
  CHECK(n == 2 * (r.terms_used - 1) + 1);
  CHECK(series_terms_for_tail(0.8, -1.0) <= n);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(theta_series(ThetaKind::Theta3, 0.0, 0.0, 1e-9), std::domain_error);
  CHECK_THROWS_AS(theta_series(ThetaKind::Theta3, 0.0, -1.0, 1e-9), std::domain_error);
  CHECK_THROWS_AS(theta_series(ThetaKind::Theta3, HUGE_VAL, 1.0, 1e-9), std::domain_error);
  CHECK_THROWS_AS(theta_series(ThetaKind::Theta3, 0.0, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(theta_series(ThetaKind::Theta3, 0.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(theta_product(ThetaKind::Theta3, 0.0, -0.5, 1e-9), std::domain_error);
}
