#pragma once

#include "lkweld/boundary_curve.hpp"
#include "lkweld/circle_homeo.hpp"

namespace lkweld {

// Spectral (Theodorsen) conformal maps of a star-like curve r = 1 - delta(psi)
// onto the disk and the disk exterior. Independent of the first-order
// formulas in asymptotic.hpp.

enum class MapSide { interior, exterior };

struct OracleOptions {
  double tol = 1e-12;
  int max_iter = 200;
  std::size_t grid = 0;           // theta grid; 0 = the curve's grid
  double damping_slope = 0.3;     // damp when sup|d log r/d psi| >= this
  double damping = 0.5;
};

struct MapSolution {
  MapSide side = MapSide::interior;
  CircleHomeo psi_of_theta;  // boundary correspondence theta -> psi
  double conf_factor = 1.0;  // interior f'(0); exterior F'(inf) = e^{-tau}
  int iterations = 0;
  double residual = 0.0;     // sup |T(psi) - psi| at the last iterate
  bool damped = false;
  TrigSeries boundary;       // boundary values r(psi(theta)) e^{i psi(theta)}

  // Taylor coefficient a_k of the map: f = sum_{k>=1} a_k z^k,
  // F = sum_{k<=1} a_k z^k.
  cplx coefficient(int k) const { return boundary.coeff(k); }
  // Interior: |z| <= 1; exterior: |z| >= 1.
  cplx eval(cplx z) const;
  // Exterior only: F(z) = e^{-tau} z + b0 + b1/z + ...
  double tau() const;
  cplx b0() const { return coefficient(0); }
  cplx b1() const { return coefficient(-1); }
};

MapSolution solve_interior(const BoundaryCurve& curve, const OracleOptions& opts = {});
MapSolution solve_exterior(const BoundaryCurve& curve, const OracleOptions& opts = {});

// The conformal welding F^{-1} o f as a map of boundary parameters:
// interior parameter s -> exterior parameter sigma with f(e^{is}) = F(e^{i sigma}).
// Its inverse is the map phi~ -> phi. Sampled on the interior grid.
CircleHomeo true_welding(const MapSolution& interior, const MapSolution& exterior);

struct LebedevReport {
  double tau = 0.0;
  double t = 0.0;
  double slack = 0.0;  // t - tau
};

inline constexpr double kLebedevSlackFloor = -1e-9;

// Compares the exterior capacity parameter tau of Gamma(t) with the interior
// parameter t (f'(0, t) = e^{-t}). Throws NumericalFailure("lebedev") when
// t - tau < -1e-9.
LebedevReport lebedev_check(double t, const MapSolution& exterior);

}  // namespace lkweld
