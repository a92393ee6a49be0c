#pragma once

#include <vector>

#include "diracband/types.hpp"

namespace diracband::oracle {

/// Shooting formulation of one radial eigenvalue problem.  Integrates the
/// first-order system from a Frobenius seed near the origin and scores the
/// boundary condition at r = R.  Keeps no dependency on the Bessel kernel.
struct ShootingProblem {
  ProblemSpec spec;
  double mu = 0.0;
  double r_start_frac = 1e-5;  // r_start = R * r_start_frac
  int series_order = 6;
};

// Normalized boundary-condition residual at energy E.
// APS: cross product of the boundary value with the selected B_mu eigenvector;
// chiral bag: f(R) - e^{-lambda} g(R).
double shoot(const ShootingProblem& problem, double E);

// Roots of the shooting residual in [e_lo, e_hi], by scan plus bisection.
// Returns what was found; fewer than `count` signals an insufficient window.
std::vector<double> oracle_eigenvalues(const ShootingProblem& problem, int count,
                                       double e_lo, double e_hi);

}  // namespace diracband::oracle
