// Sweep kernels: grid layout, agreement with pointwise evaluation, and
// bit-exactness of the serial and parallel execution paths.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "theta_gauss/gauss_approx.hpp"
#include "theta_gauss/modular.hpp"
#include "theta_gauss/sweep.hpp"

using namespace theta_gauss;

TEST_CASE("table grid layout and row ordering") {
  auto rows = table_grid(ThetaKind::Theta3, 0.0, 1.0, 0.5, 2.0, 3, 1e-12, Exec::Serial);
  REQUIRE(rows.size() == 9);

  // t-major, v within each t block, both ascending.
  std::vector<double> want_t = {0.5, 0.5, 0.5, 1.25, 1.25, 1.25, 2.0, 2.0, 2.0};
  std::vector<double> want_v = {0.0, 0.5, 1.0, 0.0, 0.5, 1.0, 0.0, 0.5, 1.0};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].kind == ThetaKind::Theta3);
    CHECK(rows[i].t == want_t[i]);
    CHECK(rows[i].v == want_v[i]);
  }

  // Method selection rides the t >= 1 crossover.
  CHECK(rows[0].report.method == Method::Transformed);
  CHECK(rows[8].report.method == Method::DirectSeries);
}

TEST_CASE("table rows reproduce pointwise evaluations bit for bit") {
  for (ThetaKind kind :
       {ThetaKind::Theta1, ThetaKind::Theta2, ThetaKind::Theta3, ThetaKind::Theta4}) {
    auto rows = table_grid(kind, -0.8, 1.2, 0.25, 4.0, 3, 1e-11, Exec::Serial);
    for (const TableRow& row : rows) {
      EvalReport direct = theta_auto(kind, row.v, row.t, 1e-11);
      INFO("kind ", static_cast<int>(kind), " v ", row.v, " t ", row.t);
      CHECK(row.report.value.sign() == direct.value.sign());
      CHECK(row.report.value.log_mag() == direct.value.log_mag());
      CHECK(row.report.terms_used == direct.terms_used);
      CHECK(row.report.method == direct.method);
    }
  }
}

TEST_CASE("steps of one pins the low edge") {
  auto rows = table_grid(ThetaKind::Theta2, 0.3, 0.9, 0.7, 5.0, 1, 1e-12, Exec::Serial);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].v == 0.3);
  CHECK(rows[0].t == 0.7);
}

TEST_CASE("serial and parallel tables are bit-identical") {
  auto serial = table_grid(ThetaKind::Theta1, -1.0, 1.5, 0.1, 3.0, 7, 1e-12, Exec::Serial);
  auto parallel = table_grid(ThetaKind::Theta1, -1.0, 1.5, 0.1, 3.0, 7, 1e-12, Exec::Parallel);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].v == parallel[i].v);
    CHECK(serial[i].t == parallel[i].t);
    CHECK(serial[i].report.value.sign() == parallel[i].report.value.sign());
    CHECK(serial[i].report.value.log_mag() == parallel[i].report.value.log_mag());
    CHECK(serial[i].report.tail_bound.log_mag() == parallel[i].report.tail_bound.log_mag());
  }
}

TEST_CASE("serial and parallel remainder sups are bit-identical") {
  std::vector<double> ts = {0.05, 0.1, 0.2, 0.3};
  auto serial = remainder_sups(ThetaKind::Theta4, 0.25, ts, 201, Exec::Serial);
  auto parallel = remainder_sups(ThetaKind::Theta4, 0.25, ts, 201, Exec::Parallel);
  REQUIRE(serial.size() == ts.size());
  REQUIRE(parallel.size() == ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    CHECK(serial[i].sign() == 1);
    CHECK(serial[i].sign() == parallel[i].sign());
    CHECK(serial[i].log_mag() == parallel[i].log_mag());
  }
  // Sups shrink as t does.
  for (std::size_t i = 1; i < ts.size(); ++i)
    CHECK(serial[i - 1].log_mag() < serial[i].log_mag());
}

TEST_CASE("thread override env var is honored without changing results") {
  std::vector<double> ts = {0.1, 0.25};
  auto base = remainder_sups(ThetaKind::Theta3, 0.2, ts, 101, Exec::Parallel);
  REQUIRE(setenv("THETA_GAUSS_THREADS", "1", 1) == 0);
  auto pinned = remainder_sups(ThetaKind::Theta3, 0.2, ts, 101, Exec::Parallel);
  REQUIRE(unsetenv("THETA_GAUSS_THREADS") == 0);
  REQUIRE(base.size() == pinned.size());
  for (std::size_t i = 0; i < base.size(); ++i)
    CHECK(base[i].log_mag() == pinned[i].log_mag());
}

TEST_CASE("sweep input validation") {
  CHECK_THROWS_AS(table_grid(ThetaKind::Theta3, 0.0, 1.0, 0.5, 2.0, 0, 1e-12),
                  std::domain_error);
  CHECK_THROWS_AS(table_grid(ThetaKind::Theta3, 1.0, 0.0, 0.5, 2.0, 3, 1e-12),
                  std::domain_error);
  CHECK_THROWS_AS(table_grid(ThetaKind::Theta3, 0.0, 1.0, 2.0, 0.5, 3, 1e-12),
                  std::domain_error);
  CHECK_THROWS_AS(table_grid(ThetaKind::Theta3, 0.0, 1.0, 0.0, 2.0, 3, 1e-12),
                  std::domain_error);
  CHECK_THROWS_AS(remainder_sups(ThetaKind::Theta3, 0.0, {0.1}, 11), std::domain_error);
  CHECK_THROWS_AS(remainder_sups(ThetaKind::Theta3, 0.25, {0.1}, 1), std::domain_error);
}
