#pragma once

#include <cstddef>
#include <functional>

namespace torustam {

struct QuadratureResult {
  double value = 0;
  double abs_err = 0;        ///< sum of the local Richardson error estimates
  std::size_t intervals = 0; ///< accepted subintervals
};

/// Adaptive Simpson on [a, b]. An interval is accepted when its
/// halving estimate |S₂ − S₁|/15 is within its share of `tol`. Throws
/// ToleranceUnreachable past `max_intervals` subintervals.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                                  std::size_t max_intervals = std::size_t{1} << 20);

}  // namespace torustam
