#pragma once

#include <span>
#include <vector>

namespace lkweld {

// Log-log least-squares fit error ~ C * x^slope.
struct ConvergenceFit {
  std::vector<double> x;      // all supplied abscissae (t, tau or epsilon)
  std::vector<double> error;  // all supplied errors
  std::vector<bool> used;     // point entered the fit
  double slope = 0.0;
  double intercept = 0.0;     // log C
  double half_width = 0.0;    // 95% confidence half-width of the slope
  bool degenerate = false;    // fewer than two usable points

  std::size_t used_count() const;
};

// Points with error < floor_factor * numerical_floor (or non-positive) are
// excluded so that saturation at the noise floor cannot bias the slope.
ConvergenceFit fit_order(std::span<const double> x, std::span<const double> error,
                         double numerical_floor, double floor_factor = 100.0);

}  // namespace lkweld
