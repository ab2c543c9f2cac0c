#include "lkweld/evolution.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

#include "lkweld/errors.hpp"

namespace lkweld {
namespace {

template <std::size_t N>
using State = std::array<cplx, N>;

template <std::size_t N>
State<N> axpy(const State<N>& y, double a, const State<N>& k) {
  State<N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = y[i] + a * k[i];
  return out;
}

// One classical RK4 step for y' = rhs(sigma, y).
template <std::size_t N, class Rhs>
State<N> rk4_step(const Rhs& rhs, double sigma, const State<N>& y, double h) {
  const State<N> k1 = rhs(sigma, y);
  const State<N> k2 = rhs(sigma + 0.5 * h, axpy(y, 0.5 * h, k1));
  const State<N> k3 = rhs(sigma + 0.5 * h, axpy(y, 0.5 * h, k2));
  const State<N> k4 = rhs(sigma + h, axpy(y, h, k3));
  State<N> out;
  for (std::size_t i = 0; i < N; ++i) {
    out[i] = y[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return out;
}

// Driving time at flow time sigma of an evolution to t; clamped against
// roundoff at the endpoints.
double reversed_time(double t, double sigma) { return std::max(0.0, t - sigma); }

void check_log_modulus(double previous, double current, double sigma) {
  if (current > kDiskExitTol) {
    std::ostringstream msg;
    msg << "trajectory left the closed disk (log|w| = " << current << " at sigma = " << sigma << ")";
    throw NumericalFailure("integrate", msg.str());
  }
  if (current > previous + kMonotoneSlack) {
    std::ostringstream msg;
    msg << "|w| increased along the flow at sigma = " << sigma;
    throw NumericalFailure("integrate", msg.str());
  }
}

template <class Fn>
void for_each_index(std::size_t n, bool parallel, Fn&& fn) {
  if (!parallel) {
    for (std::size_t j = 0; j < n; ++j) fn(j);
    return;
  }
  const std::size_t workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t j = w; j < n; j += workers) fn(j);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

Trajectory integrate_characteristic(const DrivingFunction& p, cplx z0, double t, std::size_t steps,
                                    bool keep_trajectory) {
  if (std::abs(z0) > 1.0 + 1e-12) throw InvalidArgument("integrate_characteristic: |z0| > 1");
  if (!(t >= 0.0) || !(t < p.horizon())) {
    throw InvalidArgument("integrate_characteristic: t outside the driving horizon");
  }
  if (steps == 0) throw InvalidArgument("integrate_characteristic: steps must be positive");
  Trajectory out;
  if (keep_trajectory) out.points.reserve(steps + 1);
  if (z0 == cplx(0.0, 0.0)) {
    out.endpoint = 0.0;
    if (keep_trajectory) out.points.assign(steps + 1, 0.0);
    return out;
  }
  auto rhs = [&](double sigma, const State<1>& y) -> State<1> {
    return {-p.eval(std::exp(y[0]), reversed_time(t, sigma))};
  };
  State<1> y{std::log(z0)};
  if (keep_trajectory) out.points.push_back(z0);
  const double h = t / static_cast<double>(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    const double sigma = h * static_cast<double>(i);
    const State<1> next = rk4_step<1>(rhs, sigma, y, h);
    check_log_modulus(y[0].real(), next[0].real(), sigma + h);
    y = next;
    if (keep_trajectory) out.points.push_back(std::exp(y[0]));
  }
  out.endpoint = std::exp(y[0]);
  return out;
}

std::vector<cplx> reconstruct_interior(const DrivingFunction& p, const std::vector<cplx>& seeds,
                                       double t, std::size_t steps) {
  std::vector<cplx> out;
  out.reserve(seeds.size());
  for (const cplx z : seeds) out.push_back(integrate_characteristic(p, z, t, steps).endpoint);
  return out;
}

EvolutionResult evolve_boundary(const EvolutionConfig& cfg) {
  require_grid_size(cfg.boundary_n);
  if (cfg.steps < kMinEvolutionSteps) {
    throw InvalidArgument("evolve_boundary: steps must be >= " + std::to_string(kMinEvolutionSteps));
  }
  if (!(cfg.t_final >= 0.0) || !(cfg.t_final < cfg.p.horizon())) {
    throw InvalidArgument("evolve_boundary: t_final must lie in [0, horizon)");
  }
  const std::size_t n = cfg.boundary_n;
  const double t = cfg.t_final;
  EvolutionResult res;
  res.t = t;
  res.raw_points.resize(n);
  res.raw_delta.resize(n);
  res.logderiv.resize(n);
  res.star_angle.resize(n);

  // State: log h and log(zeta h'/h). The second obeys
  //   d/dsigma log(zeta h'/h) = -h p'(h, t - sigma).
  std::vector<cplx> log_h(n);
  auto rhs = [&](double sigma, const State<2>& y) -> State<2> {
    const cplx w = std::exp(y[0]);
    const DrivingValue v = cfg.p.eval_derivs(w, reversed_time(t, sigma));
    return {-v.p, -w * v.dp};
  };
  const double h = t / static_cast<double>(cfg.steps);
  for_each_index(n, cfg.parallel, [&](std::size_t j) {
    const double phi = grid_angle(j, n);
    State<2> y{cplx(0.0, phi), cplx(0.0, 0.0)};
    if (t > 0.0) {
      for (std::size_t i = 0; i < cfg.steps; ++i) {
        const double sigma = h * static_cast<double>(i);
        const State<2> next = rk4_step<2>(rhs, sigma, y, h);
        check_log_modulus(y[0].real(), next[0].real(), sigma + h);
        y = next;
      }
    }
    log_h[j] = y[0];
    res.raw_points[j] = std::exp(y[0]);
    res.raw_delta[j] = -std::expm1(y[0].real());
    res.logderiv[j] = y[1] + y[0] - cplx(0.0, phi);
    res.star_angle[j] = y[1].imag();
  });

  std::vector<double> psi(n), log_r(n);
  for (std::size_t j = 0; j < n; ++j) {
    psi[j] = log_h[j].imag();
    log_r[j] = log_h[j].real();
  }
  try {
    res.angle_map = CircleHomeo(psi);
  } catch (const NumericalFailure& e) {
    throw NumericalFailure("evolve", std::string("angle map psi_t(phi) is not monotone; t = ") +
                                         std::to_string(t) + " is beyond the star-like regime (" +
                                         e.what() + ")");
  }
  const TrigSeries log_r_series = TrigSeries::analyze(std::span<const double>(log_r));
  std::vector<double> delta(n);
  for_each_index(n, cfg.parallel, [&](std::size_t k) {
    const double phi = res.angle_map.inverse(grid_angle(k, n));
    delta[k] = -std::expm1(log_r_series.real_at(phi));
  });
  res.curve = BoundaryCurve(TrigSeries::analyze(std::span<const double>(delta)));
  return res;
}

RegularityRatios regularity_ratios(const EvolutionResult& result) {
  if (!(result.t > 0.0)) throw InvalidArgument("regularity_ratios: t must be positive");
  const auto& c = result.curve;
  return {c.delta().sup_norm() / result.t, c.delta_prime().sup_norm() / result.t,
          c.delta_second().sup_norm() / result.t};
}

double star_angle_defect(const EvolutionResult& result) {
  double m = 0.0;
  for (double a : result.star_angle) m = std::max(m, std::abs(a));
  return m;
}

}  // namespace lkweld
