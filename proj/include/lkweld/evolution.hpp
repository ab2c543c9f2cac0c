#pragma once

#include <vector>

#include "lkweld/boundary_curve.hpp"
#include "lkweld/caratheodory.hpp"
#include "lkweld/circle_homeo.hpp"

namespace lkweld {

inline constexpr std::size_t kMinEvolutionSteps = 64;
inline constexpr std::size_t kDefaultEvolutionSteps = 256;
inline constexpr std::size_t kDefaultBoundaryGrid = 512;
inline constexpr double kDiskExitTol = 1e-10;
inline constexpr double kMonotoneSlack = 1e-12;

struct Trajectory {
  cplx endpoint;
  std::vector<cplx> points;  // steps + 1 points when retained, else empty
};

// Integrates the characteristic dw/dsigma = -w p(w, t - sigma), w(0) = z0,
// over sigma in [0, t] with classical RK4 in log w. The endpoint is f(z0, t)
// of the decreasing Loewner-Kufarev chain (time-reversed driving; a no-op
// for time-constant p). steps >= 1.
Trajectory integrate_characteristic(const DrivingFunction& p, cplx z0, double t, std::size_t steps,
                                    bool keep_trajectory = false);

// f(z, t) at interior seeds.
std::vector<cplx> reconstruct_interior(const DrivingFunction& p, const std::vector<cplx>& seeds,
                                       double t, std::size_t steps);

struct EvolutionConfig {
  DrivingFunction p;
  double t_final = 0.0;
  std::size_t steps = kDefaultEvolutionSteps;
  std::size_t boundary_n = kDefaultBoundaryGrid;
  bool parallel = false;
};

struct EvolutionResult {
  double t = 0.0;
  BoundaryCurve curve;               // delta_t on the uniform psi grid
  CircleHomeo angle_map;             // phi -> psi_t
  std::vector<cplx> raw_points;      // f(e^{i phi_j}, t)
  std::vector<double> raw_delta;     // 1 - |f(e^{i phi_j}, t)|
  std::vector<cplx> logderiv;        // log f'(e^{i phi_j}, t)
  std::vector<double> star_angle;    // arg(z f'/f) at e^{i phi_j}
};

// Evolves the unit circle along the boundary characteristics and extracts
// the polar data of the image curve. Throws InvalidArgument for a bad
// config and NumericalFailure("evolve") when the angle map loses
// monotonicity or a trajectory leaves the closed disk.
EvolutionResult evolve_boundary(const EvolutionConfig& cfg);

struct RegularityRatios {
  double delta = 0.0;
  double delta_prime = 0.0;
  double delta_second = 0.0;
};

// (sup|delta_t|, sup|delta_t'|, sup|delta_t''|) / t.
RegularityRatios regularity_ratios(const EvolutionResult& result);

// sup over the boundary grid of |arg(z f'(z, t) / f(z, t))|.
double star_angle_defect(const EvolutionResult& result);

}  // namespace lkweld
