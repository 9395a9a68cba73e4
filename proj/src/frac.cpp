#include "theta_gauss/frac.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace theta_gauss {

Decomposition decompose(double x) {
  if (!std::isfinite(x)) {
    throw std::domain_error("decompose: argument must be finite");
  }
  // 2^62 keeps floor(x) and floor(x + 1/2) inside int64 range. Doubles of
  // this size are already integers, so nothing useful is lost.
  if (std::fabs(x) >= 4.611686018427387904e18) {
    throw std::domain_error("decompose: |x| too large for exact integer part (got " +
                            std::to_string(x) + ")");
  }

  Decomposition d;
  // At or above 2^52 every double is an integer and the half-integer probes
  // below would themselves round; both splits are trivial.
  if (std::fabs(x) >= 4503599627370496.0) {
    d.int_part = static_cast<std::int64_t>(x);
    d.frac_part = 0.0;
    d.centered = -0.5;
    d.nearest_int = d.int_part;
    d.nearest_rem = 0.0;
    return d;
  }

  double fl = std::floor(x);
  double frac = x - fl;
  // For x in (-1, 0) the true remainder x + 1 may carry more bits than a
  // double holds and can round clear up to 1.0; fold that back so frac stays
  // in [0, 1). Reconstruction is then off by that same sub-ulp rounding.
  if (frac >= 1.0) {
    fl += 1.0;
    frac = 0.0;
  }

  double m = std::floor(x + 0.5);
  // x + 0.5 itself rounds next to half-integers, so m can be off by one.
  // Below 2^52 the bounds m -+ 1/2 are exact doubles, making these checks
  // exact: enforce m - 1/2 <= x < m + 1/2, ties at -1/2 kept (round up).
  if (x < m - 0.5) m -= 1.0;
  if (x >= m + 0.5) m += 1.0;

  d.int_part = static_cast<std::int64_t>(fl);
  d.frac_part = frac;
  d.centered = frac - 0.5;
  d.nearest_int = static_cast<std::int64_t>(m);
  d.nearest_rem = x - m;  // exact: x and m share a grid step below 2^52
  return d;
}

}  // namespace theta_gauss
