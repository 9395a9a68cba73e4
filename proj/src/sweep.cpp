#include "theta_gauss/sweep.hpp"

#include <cmath>
#include <stdexcept>

#include "theta_gauss/gauss_approx.hpp"
#include "theta_gauss/modular.hpp"

namespace theta_gauss {

std::vector<TableRow> table_grid(ThetaKind kind, double v_lo, double v_hi, double t_lo,
                                 double t_hi, std::int64_t steps, double tol, Exec exec) {
  if (steps < 1) throw std::domain_error("table_grid: steps must be >= 1");
  if (!(v_lo <= v_hi) || !(t_lo <= t_hi)) {
    throw std::domain_error("table_grid: ranges must be ordered");
  }
  if (!(t_lo > 0.0)) throw std::domain_error("table_grid: t must be positive");

  const std::int64_t total = steps * steps;
  std::vector<TableRow> rows(static_cast<std::size_t>(total));
  auto coord = [steps](double lo, double hi, std::int64_t i) {
    if (steps == 1) return lo;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
  };
  // t-major index so the result comes out sorted by (t, v) without a sort.
  parallel_for(total, exec, [&](std::int64_t idx) {
    const std::int64_t ti = idx / steps;
    const std::int64_t vi = idx % steps;
    TableRow& row = rows[static_cast<std::size_t>(idx)];
    row.kind = kind;
    row.v = coord(v_lo, v_hi, vi);
    row.t = coord(t_lo, t_hi, ti);
    row.report = theta_auto(kind, row.v, row.t, tol);
  });
  return rows;
}

std::vector<ScaledReal> remainder_sups(ThetaKind kind, double C,
                                       const std::vector<double>& t_values,
                                       std::int64_t x_count, Exec exec) {
  if (!(C > 0.0)) throw std::domain_error("remainder_sups: C must be positive");
  if (x_count < 2) throw std::domain_error("remainder_sups: x_count must be >= 2");

  const std::int64_t nt = static_cast<std::int64_t>(t_values.size());
  const std::int64_t total = nt * x_count;
  std::vector<double> logs(static_cast<std::size_t>(total));
  parallel_for(total, exec, [&](std::int64_t idx) {
    const std::int64_t ti = idx / x_count;
    const std::int64_t xi = idx % x_count;
    const double x =
        -C + 2.0 * C * static_cast<double>(xi) / static_cast<double>(x_count - 1);
    logs[static_cast<std::size_t>(idx)] =
        gaussian_remainder(kind, x, t_values[static_cast<std::size_t>(ti)]).log_mag();
  });

  // Serial max per t; identical for both exec policies.
  std::vector<ScaledReal> sups;
  sups.reserve(t_values.size());
  for (std::int64_t ti = 0; ti < nt; ++ti) {
    double best = logs[static_cast<std::size_t>(ti * x_count)];
    for (std::int64_t xi = 1; xi < x_count; ++xi) {
      best = std::max(best, logs[static_cast<std::size_t>(ti * x_count + xi)]);
    }
    sups.push_back(ScaledReal::from_log(1, best));
  }
  return sups;
}

}  // namespace theta_gauss
