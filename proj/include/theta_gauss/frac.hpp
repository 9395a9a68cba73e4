// Exact splittings of a real argument into integer and remainder parts.
//
// Two conventions are needed side by side:
//
//   floor split      x = [x] + {x},          {x} in [0, 1)
//   centered         ((x)) = {x} - 1/2,      in [-1/2, 1/2)
//   nearest split    x = m + <<x>>,          <<x>> in [-1/2, 1/2),
//                    m the nearest integer, half-integers rounding up
//
// Both remainders are computed from the same floating-point subtraction, so
// they are exact whenever x - floor(x) is (always, for |x| < 2^52). The
// integer parts are returned as int64 and inputs too large for that to be
// exact are rejected rather than silently wrapped.

#pragma once

#include <cstdint>

namespace theta_gauss {

struct Decomposition {
  std::int64_t int_part;     // [x]
  double frac_part;          // {x} in [0, 1)
  double centered;           // ((x)) = {x} - 1/2 in [-1/2, 1/2)
  std::int64_t nearest_int;  // m = floor(x + 1/2), ties rounding up
  double nearest_rem;        // x - m in [-1/2, 1/2)
};

// Throws std::domain_error if x is not finite or |x| >= 2^62.
Decomposition decompose(double x);

}  // namespace theta_gauss
