#include "lkweld/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lkweld/diagnostics.hpp"
#include "lkweld/errors.hpp"

namespace lkweld {
namespace {

const char* stage_of(MapSide side) {
  return side == MapSide::interior ? "oracle-interior" : "oracle-exterior";
}

bool strictly_increasing_lift(const std::vector<double>& v) {
  for (std::size_t j = 1; j < v.size(); ++j) {
    if (!(v[j] > v[j - 1])) return false;
  }
  return v.front() + kTwoPi > v.back();
}

// Theodorsen fixed point psi = theta + sign * K[log r(psi)], with K the
// harmonic conjugate; sign = +1 inside, -1 outside.
MapSolution solve(const BoundaryCurve& curve, const OracleOptions& opts, MapSide side) {
  const std::size_t n = opts.grid == 0 ? curve.size() : opts.grid;
  require_grid_size(n);
  const char* stage = stage_of(side);
  const double sign = side == MapSide::interior ? 1.0 : -1.0;

  MapSolution sol;
  sol.side = side;
  const double slope = curve.max_log_slope();
  if (slope >= 1.0) {
    std::ostringstream msg;
    msg << stage << ": sup|d log r/d psi| = " << slope
        << " >= 1, Theodorsen iteration may not contract";
    warn(msg.str());
  }
  sol.damped = slope >= opts.damping_slope;
  const double omega = sol.damped ? opts.damping : 1.0;

  std::vector<double> psi(n), log_r(n), next(n);
  for (std::size_t j = 0; j < n; ++j) psi[j] = grid_angle(j, n);

  auto log_radius_at = [&](const std::vector<double>& angles) {
    for (std::size_t j = 0; j < n; ++j) log_r[j] = curve.log_radius(angles[j]);
    return TrigSeries::analyze(std::span<const double>(log_r));
  };

  bool converged = false;
  for (int it = 1; it <= opts.max_iter; ++it) {
    const TrigSeries conj = harmonic_conjugate(log_radius_at(psi));
    const auto kv = conj.real_values();
    double defect = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double target = grid_angle(j, n) + sign * kv[j];
      defect = std::max(defect, std::abs(target - psi[j]));
      next[j] = psi[j] + omega * (target - psi[j]);
    }
    psi.swap(next);
    sol.iterations = it;
    sol.residual = defect;
    if (!strictly_increasing_lift(psi)) {
      std::ostringstream msg;
      msg << "iterate " << it << " lost monotonicity";
      throw NumericalFailure(stage, msg.str());
    }
    if (defect <= opts.tol) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    std::ostringstream msg;
    msg << "no convergence in " << opts.max_iter << " iterations (residual " << sol.residual << ")";
    throw NumericalFailure(stage, msg.str());
  }

  const TrigSeries final_log_r = log_radius_at(psi);
  sol.conf_factor = std::exp(final_log_r.mean());
  sol.psi_of_theta = CircleHomeo(psi);
  std::vector<cplx> bvals(n);
  for (std::size_t j = 0; j < n; ++j) bvals[j] = std::exp(cplx(log_r[j], psi[j]));
  sol.boundary = TrigSeries::analyze(std::span<const cplx>(bvals));
  return sol;
}

}  // namespace

cplx MapSolution::eval(cplx z) const {
  const int half = static_cast<int>(boundary.size() / 2);
  cplx acc = 0.0;
  if (side == MapSide::interior) {
    if (std::abs(z) > 1.0 + 1e-12) throw InvalidArgument("interior map evaluated outside the disk");
    for (int k = half - 1; k >= 1; --k) acc = (acc + boundary.coeff(k)) * z;
    return acc;
  }
  if (std::abs(z) < 1.0 - 1e-12) throw InvalidArgument("exterior map evaluated inside the disk");
  const cplx w = 1.0 / z;
  for (int k = half - 1; k >= 1; --k) acc = (acc + boundary.coeff(-k)) * w;
  return boundary.coeff(1) * z + boundary.coeff(0) + acc;
}

double MapSolution::tau() const { return -std::log(conf_factor); }

MapSolution solve_interior(const BoundaryCurve& curve, const OracleOptions& opts) {
  return solve(curve, opts, MapSide::interior);
}

MapSolution solve_exterior(const BoundaryCurve& curve, const OracleOptions& opts) {
  return solve(curve, opts, MapSide::exterior);
}

CircleHomeo true_welding(const MapSolution& interior, const MapSolution& exterior) {
  if (interior.side != MapSide::interior || exterior.side != MapSide::exterior) {
    throw InvalidArgument("true_welding: expects (interior, exterior) solutions");
  }
  const auto& pi = interior.psi_of_theta;
  const auto& pe = exterior.psi_of_theta;
  if (std::abs(pi.samples().front() - pe.samples().front()) > kPi) {
    throw NumericalFailure("weld-oracle", "boundary correspondences use different psi branches");
  }
  return CircleHomeo::sample(pi.size(), [&](double s) { return pe.inverse(pi(s)); });
}

LebedevReport lebedev_check(double t, const MapSolution& exterior) {
  if (exterior.side != MapSide::exterior) throw InvalidArgument("lebedev_check: needs exterior map");
  LebedevReport r{exterior.tau(), t, 0.0};
  r.slack = t - r.tau;
  if (r.slack < kLebedevSlackFloor) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "tau = " << r.tau << " exceeds t = " << t << " (slack " << r.slack << ")";
    throw NumericalFailure("lebedev", msg.str());
  }
  return r;
}

}  // namespace lkweld
