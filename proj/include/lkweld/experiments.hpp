#pragma once

#include <vector>

#include "lkweld/asymptotic.hpp"
#include "lkweld/convergence.hpp"
#include "lkweld/evolution.hpp"
#include "lkweld/oracle.hpp"
#include "lkweld/scenario.hpp"

namespace lkweld {

// Numerical floor of a pipeline that evolves a curve and then solves for
// its conformal maps: integrator error plus oracle tolerance.
inline constexpr double kIntegratorFloor = 1e-10;

inline double evolution_floor(const Scenario& s) { return kIntegratorFloor + s.tol; }
inline double oracle_floor(const Scenario& s) { return s.tol; }

struct Theorem1Row {
  double t, error, tau, slack;
};

struct Theorem1Report {
  std::vector<Theorem1Row> rows;
  ConvergenceFit fit;        // error vs t
  ConvergenceFit slack_fit;  // slack vs t
};

// For each t: evolve, solve interior and exterior maps, form the true
// welding phi~ -> phi and compare with phi~ + 2 Im p(e^{i phi~}, 0) t in
// circle distance.
Theorem1Report run_theorem1(const Scenario& s);

struct TheoremBRow {
  double eps, error;
};

struct TheoremBReport {
  std::vector<TheoremBRow> rows;
  ConvergenceFit fit;
};

// For each eps: delta = eps * shape, oracle welding sigma(s), error
// sup_s |s + h(s) - sigma(s) + h(sigma(s))|.
TheoremBReport run_theoremB(const Scenario& s);

struct TheoremARow {
  double eps, interior_error, exterior_error;
};

struct TheoremAReport {
  std::vector<TheoremARow> rows;
  ConvergenceFit interior_fit;
  ConvergenceFit exterior_fit;
};

// Sup over the unit circle of |oracle map - Schwarz-integral asymptotic map|
// for both sides, on the curves eps * shape over eps_list (shape defaults to
// cos psi when scenario.delta is unset).
TheoremAReport run_theoremA(const Scenario& s);

struct DualityRow {
  double t, tau, error;
};

struct DualityReport {
  std::vector<DualityRow> rows;
  ConvergenceFit fit;  // error vs tau
};

// For each t: exterior map F of Gamma(t); error sup_{|z|=0.9}
// |z F(1/z) - 1 + p*(z, 0) tau|.
DualityReport run_duality(const Scenario& s);

inline constexpr double kDualityRadius = 0.9;

// z F(1/z) for |z| < 1 from the exterior map's Laurent coefficients.
cplx reflected_exterior_map(const MapSolution& exterior, cplx z);

struct LebedevRow {
  double t, tau, slack;
};

struct LebedevSeries {
  std::vector<LebedevRow> rows;
  ConvergenceFit fit;  // slack vs t
};

LebedevSeries run_lebedev(const Scenario& s);

// Single-curve pipelines used by the CLI.
EvolutionResult evolve_scenario(const Scenario& s, double t);
BoundaryCurve scenario_curve(const Scenario& s);
OracleOptions oracle_options(const Scenario& s);

}  // namespace lkweld
