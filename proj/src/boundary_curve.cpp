#include "lkweld/boundary_curve.hpp"

#include <algorithm>
#include <cmath>

#include "lkweld/errors.hpp"

namespace lkweld {

BoundaryCurve::BoundaryCurve(TrigSeries delta) : delta_(std::move(delta)) {
  if (!delta_.is_real()) throw InvalidArgument("boundary curve: delta must be real");
  delta_.check_resolution("boundary curve");
  delta_prime_ = delta_.derivative(1);
  delta_second_ = delta_.derivative(2);
  epsilon_ = std::max({delta_.sup_norm(), delta_prime_.sup_norm(), delta_second_.sup_norm()});
  const auto d = delta_.real_values();
  const auto dp = delta_prime_.real_values();
  for (std::size_t j = 0; j < d.size(); ++j) {
    const double r = 1.0 - d[j];
    if (!(r > 0.0)) throw InvalidArgument("boundary curve: polar radius 1 - delta must be positive");
    max_log_slope_ = std::max(max_log_slope_, std::abs(dp[j] / r));
  }
}

BoundaryCurve BoundaryCurve::rotated(double a) const {
  return BoundaryCurve(delta_.apply_multiplier(
      [a, n = static_cast<int>(size())](int k) -> cplx {
        // The Nyquist mode of a real series is a cosine; keep it real.
        if (k == -n / 2) return std::cos(k * a);
        return std::polar(1.0, -k * a);
      },
      true));
}

BoundaryCurve BoundaryCurve::reflected() const {
  const int n = static_cast<int>(size());
  std::vector<cplx> centered(size());
  for (int k = -n / 2; k < n / 2; ++k) {
    centered[k + n / 2] = k == -n / 2 ? delta_.coeff(k) : delta_.coeff(-k);
  }
  return BoundaryCurve(TrigSeries::from_coefficients(centered, true));
}

}  // namespace lkweld
