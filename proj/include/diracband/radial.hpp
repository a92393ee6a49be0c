#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "diracband/types.hpp"

namespace diracband::radial {

enum class Regime { Edge, Bulk, Critical };

/// Radial pair (f, g) of a separated 4-spinor.  For SpinorType::Phi the pair
/// multiplies (Phi^{j(+)}, Phi^{j(-)}); for SpinorType::Psi the layout is
/// (Phi^{j(-)}, Phi^{j(+)}).
struct RadialProfile {
  Regime regime = Regime::Edge;
  AngularSector sector;
  double E = 0.0;
  double mu = 0.0;
  std::function<std::pair<double, double>(double)> eval;
  std::string normalization;  // "prefactor" or "reduced"

  std::pair<double, double> operator()(double r) const { return eval(r); }
};

// |E| < |mu|, mu != 0: modified-Bessel profile with the sign conventions split
// by sgn(mu).  Switches to the reduced (regularized-series) form automatically
// close to the |E| = |mu| lines.
RadialProfile edge_profile(const AngularSector& sector, double E, double mu);

// |E| > |mu|: Bessel profile split by sgn(E).
RadialProfile bulk_profile(const AngularSector& sector, double E, double mu);

enum class CriticalCase { EEqualMinusMu, EEqualPlusMu };

// |E| = |mu|: polynomial (solid-harmonic) profile.
RadialProfile critical_profile(const AngularSector& sector, CriticalCase c, double mu);

// Scalar-factor-stripped edge state built from the regularized series; stays
// finite and nonzero in the limits E -> 0 with mu -> 0 and E -> -+mu.
RadialProfile reduced_edge_state(const AngularSector& sector, double E, double mu);

// Bulk analog built from the regularized J series.
RadialProfile reduced_bulk_state(const AngularSector& sector, double E, double mu);

// 200 logarithmically spaced points on [R/100, R].
std::vector<double> check_grid(double R);

// Max finite-difference residual of the first-order radial system over the
// grid, after normalizing the profile to unit sup over the grid.
double ode_residual(const RadialProfile& p, const std::vector<double>& grid);

// sqrt of the ball integral of f^2 + g^2 (radial measure r^2 dr) on [0, R].
double l2_norm_ball(const RadialProfile& p, double R);

// Sup-norm distance between two profiles over a grid after scaling each to
// unit sup-norm with a sign fixed by the dominant component.
double profile_distance(const RadialProfile& a, const RadialProfile& b,
                        const std::vector<double>& grid);

}  // namespace diracband::radial
