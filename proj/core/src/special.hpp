#pragma once

// Inverse hyperbolic functions in logarithmic form, clamped so that roundoff
// just outside a branch endpoint does not produce NaN.

#include <algorithm>
#include <cmath>

namespace mpa::detail {

inline constexpr double kBranchClamp = 1e-15;

inline double artanh(double x) {
  x = std::clamp(x, -1.0 + kBranchClamp, 1.0 - kBranchClamp);
  return 0.5 * (std::log1p(x) - std::log1p(-x));
}

/// arcoth(y) for |y| > 1.
inline double arcoth(double y) { return artanh(1.0 / y); }

inline double arcosh(double x) {
  x = std::max(x, 1.0);
  return std::log(x + std::sqrt((x - 1.0) * (x + 1.0)));
}

inline double arsinh(double x) { return std::asinh(x); }

inline double sech(double x) { return 1.0 / std::cosh(x); }

}  // namespace mpa::detail
