#include "lkweld/asymptotic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lkweld/diagnostics.hpp"
#include "lkweld/errors.hpp"

namespace lkweld {

cplx interior_map_asymptotic(const BoundaryCurve& curve, cplx z) {
  return z * (1.0 - schwarz_integral(curve.delta(), z));
}

cplx exterior_map_asymptotic(const BoundaryCurve& curve, cplx z) {
  if (std::abs(z) < 1.0 - 1e-12) throw InvalidArgument("exterior map: |z| < 1");
  const TrigSeries& d = curve.delta();
  const int half = static_cast<int>(d.size() / 2);
  const cplx w = 1.0 / z;
  cplx acc = 0.0;
  for (int k = half - 1; k >= 1; --k) acc = (acc + d.coeff(-k)) * w;
  return z * (1.0 - d.coeff(0) - 2.0 * acc);
}

WeldingRecord welding_asymptotic(const BoundaryCurve& curve) {
  const double eps = curve.epsilon();
  if (eps > kWeldingEpsilonWarn) {
    std::ostringstream msg;
    msg << "welding_asymptotic: epsilon = " << eps << " exceeds " << kWeldingEpsilonWarn
        << "; first-order welding is outside its asymptotic regime";
    warn(msg.str());
  }
  WeldingRecord rec;
  rec.h = conjugate_pv(curve.delta());
  const std::size_t n = curve.size();
  rec.s_grid.resize(n);
  std::vector<double> sigma(n);
  const auto hv = rec.h.real_values();
  for (std::size_t j = 0; j < n; ++j) {
    const double s = grid_angle(j, n);
    rec.s_grid[j] = s;
    const double target = s + hv[j];
    auto g = [&](double x) { return x - rec.h.real_at(x) - target; };
    if (eps == 0.0) {
      sigma[j] = s;
      continue;
    }
    double lo = s - 4.0 * eps, hi = s + 4.0 * eps;
    double glo = g(lo), ghi = g(hi);
    if (glo > 0.0 || ghi < 0.0) {
      std::ostringstream msg;
      msg << "root not bracketed at s = " << s << " (epsilon = " << eps << " too large)";
      throw NumericalFailure("weld-asymptotic", msg.str());
    }
    while (hi - lo > kWeldingBisectionTol) {
      const double mid = 0.5 * (lo + hi);
      const double gm = g(mid);
      if (gm == 0.0) {
        lo = hi = mid;
        break;
      }
      if (gm < 0.0) lo = mid; else hi = mid;
    }
    sigma[j] = 0.5 * (lo + hi);
    rec.residual = std::max(rec.residual, std::abs(g(sigma[j])));
  }
  rec.sigma_of_s = CircleHomeo(std::move(sigma));
  return rec;
}

CircleHomeo first_order_welding(const DrivingFunction& p, double t, std::size_t n) {
  if (t < 0.0) throw InvalidArgument("first_order_welding: t must be non-negative");
  double slope = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const cplx z = std::polar(1.0, grid_angle(j, n));
    // d/dtheta Im p(e^{i theta}) = Re(z p'(z)).
    slope = std::max(slope, std::abs((z * p.eval_derivs(z, 0.0).dp).real()));
  }
  if (slope > 0.0 && 2.0 * slope * t >= 1.0) {
    std::ostringstream msg;
    msg << "t = " << t << " exceeds the monotonicity bound " << 1.0 / (2.0 * slope);
    throw NumericalFailure("first-order-welding", msg.str());
  }
  return CircleHomeo::sample(n, [&](double x) {
    return x + 2.0 * p.eval(std::polar(1.0, x), 0.0).imag() * t;
  });
}

}  // namespace lkweld
