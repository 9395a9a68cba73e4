// Grid sweeps, the compute-heavy kernels of the library. Each sweep fills a
// flat array with one independent evaluation per index (serial or OpenMP,
// bit-identical by construction) and reduces serially afterwards.

#pragma once

#include <cstdint>
#include <vector>

#include "theta_gauss/parallel.hpp"
#include "theta_gauss/theta.hpp"

namespace theta_gauss {

struct TableRow {
  ThetaKind kind;
  double v;
  double t;
  EvalReport report;
};

// Uniform grid over [v_lo, v_hi] x [t_lo, t_hi], steps points per axis
// (steps == 1 pins the low edge). Rows ordered by t, then v, ascending.
std::vector<TableRow> table_grid(ThetaKind kind, double v_lo, double v_hi, double t_lo,
                                 double t_hi, std::int64_t steps, double tol,
                                 Exec exec = Exec::Parallel);

// Per t: sup over the symmetric x-grid (x_count points on [-C, C]) of the
// analytic Gaussian remainder magnitude |R_2j(x, t)|.
std::vector<ScaledReal> remainder_sups(ThetaKind kind, double C,
                                       const std::vector<double>& t_values,
                                       std::int64_t x_count, Exec exec = Exec::Parallel);

}  // namespace theta_gauss
