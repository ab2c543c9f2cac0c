#include "lkweld/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lkweld/errors.hpp"

namespace lkweld {
namespace {

// Two-sided 97.5% Student-t quantiles for 1..10 degrees of freedom.
double t_quantile(std::size_t dof) {
  static constexpr double table[] = {12.706, 4.303, 3.182, 2.776, 2.571,
                                     2.447,  2.365, 2.306, 2.262, 2.228};
  if (dof == 0) return std::numeric_limits<double>::infinity();
  if (dof <= 10) return table[dof - 1];
  return 1.96 + 2.4 / static_cast<double>(dof);
}

}  // namespace

std::size_t ConvergenceFit::used_count() const {
  return static_cast<std::size_t>(std::count(used.begin(), used.end(), true));
}

ConvergenceFit fit_order(std::span<const double> x, std::span<const double> error,
                         double numerical_floor, double floor_factor) {
  if (x.size() != error.size()) throw InvalidArgument("fit_order: size mismatch");
  ConvergenceFit fit;
  fit.x.assign(x.begin(), x.end());
  fit.error.assign(error.begin(), error.end());
  fit.used.assign(x.size(), false);
  std::vector<double> lx, le;
  const double cutoff = floor_factor * numerical_floor;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0.0 && error[i] > 0.0 && error[i] >= cutoff && std::isfinite(error[i])) {
      fit.used[i] = true;
      lx.push_back(std::log(x[i]));
      le.push_back(std::log(error[i]));
    }
  }
  const std::size_t m = lx.size();
  if (m < 2) {
    fit.degenerate = true;
    fit.slope = std::numeric_limits<double>::quiet_NaN();
    fit.intercept = std::numeric_limits<double>::quiet_NaN();
    fit.half_width = std::numeric_limits<double>::quiet_NaN();
    return fit;
  }
  double mx = 0.0, me = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    mx += lx[i];
    me += le[i];
  }
  mx /= static_cast<double>(m);
  me /= static_cast<double>(m);
  double sxx = 0.0, sxe = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxe += (lx[i] - mx) * (le[i] - me);
  }
  if (sxx == 0.0) {
    fit.degenerate = true;
    fit.slope = std::numeric_limits<double>::quiet_NaN();
    fit.intercept = std::numeric_limits<double>::quiet_NaN();
    fit.half_width = std::numeric_limits<double>::quiet_NaN();
    return fit;
  }
  fit.slope = sxe / sxx;
  fit.intercept = me - fit.slope * mx;
  if (m > 2) {
    double rss = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double r = le[i] - (fit.intercept + fit.slope * lx[i]);
      rss += r * r;
    }
    const double se = std::sqrt(rss / static_cast<double>(m - 2) / sxx);
    fit.half_width = t_quantile(m - 2) * se;
  } else {
    fit.half_width = std::numeric_limits<double>::infinity();
  }
  return fit;
}

}  // namespace lkweld
