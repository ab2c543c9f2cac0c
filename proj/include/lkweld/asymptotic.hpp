#pragma once

#include <vector>

#include "lkweld/boundary_curve.hpp"
#include "lkweld/caratheodory.hpp"
#include "lkweld/circle_homeo.hpp"

namespace lkweld {

// First-order (in epsilon) conformal maps and welding of a near-circular
// star-like curve r = 1 - delta(psi).

// f(z) ~ z (1 - S[delta](z)), |z| <= 1, S the Schwarz integral.
cplx interior_map_asymptotic(const BoundaryCurve& curve, cplx z);

// F(z) ~ z (1 - c_0 - 2 sum_{k>=1} c_{-k} z^{-k}), |z| >= 1.
cplx exterior_map_asymptotic(const BoundaryCurve& curve, cplx z);

inline constexpr double kWeldingEpsilonWarn = 0.1;
inline constexpr double kWeldingBisectionTol = 1e-12;

struct WeldingRecord {
  std::vector<double> s_grid;
  CircleHomeo sigma_of_s;  // interior parameter s -> exterior parameter sigma
  TrigSeries h;            // cotangent PV integral of delta on the grid
  double residual = 0.0;   // sup_s |sigma - h(sigma) - s - h(s)|
};

// Solves s + h(s) = sigma - h(sigma) for sigma at every grid point s by
// bisection on [s - 4 eps, s + 4 eps]. Throws NumericalFailure when the
// bracket does not contain a root.
WeldingRecord welding_asymptotic(const BoundaryCurve& curve);

// phi~ -> phi~ + 2 Im p(e^{i phi~}, 0) t as a lift on an n-point grid. Throws
// NumericalFailure when t is too large for the map to stay monotone.
CircleHomeo first_order_welding(const DrivingFunction& p, double t, std::size_t n = 512);

}  // namespace lkweld
