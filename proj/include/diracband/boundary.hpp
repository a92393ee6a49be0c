#pragma once

#include <array>
#include <complex>

#include "diracband/radial.hpp"
#include "diracband/types.hpp"

namespace diracband::boundary {

using Complex = std::complex<double>;
using Mat2 = std::array<std::array<Complex, 2>, 2>;

/// Per-sector eigendata of the boundary operator B_mu.  Coefficient vectors
/// are over (Phi^{j(+)}, Phi^{j(-)}) for the Phi layout and over
/// (Phi^{j(-)}, Phi^{j(+)}) for the Psi layout.
struct BoundaryEigenData {
  AngularSector sector;
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
  std::array<double, 2> coeff_plus{};
  std::array<double, 2> coeff_minus{};
};

// 2x2 block of B_mu on the given sector/layout.
Mat2 sector_matrix(SpinorType type, int l, double mu, double R);

// Eigenvalues (1 +- sqrt((l+1)^2 + (mu R)^2))/R with the mixing coefficients;
// at mu = 0 returns the limiting pure states with lambda in {-l/R, (l+2)/R}.
BoundaryEigenData aps_boundary_eigen(const AngularSector& sector, double mu, double R);

struct ExchangeReport {
  // angle-independence of the proportionality gamma_r Phi^(+) = const Phi^(-)
  double proportionality_spread = 0.0;
  Complex proportionality_constant{0.0, 0.0};
  // residual of B_mu gamma_r + gamma_r B_mu = (2/R) gamma_r on the sector block
  double anticommutation_defect = 0.0;
  bool passed = false;
};

ExchangeReport gamma_r_exchange_check(const AngularSector& sector, double mu, double R,
                                      int n_angles = 50, unsigned seed = 12345);

// Sphere integral of psi^dag gamma_r psi at r = R for a 4-spinor whose
// boundary value has the given layout coefficients; normalized by the
// boundary norm <psi, psi>_{S^2}.
double boundary_current_mix(const AngularSector& sector, Complex c_upper, Complex c_lower,
                            int n_theta = 64, int n_phi = 64);

// Convenience: current of a radial profile evaluated at r = R.
double boundary_current(const radial::RadialProfile& profile, double R,
                        int n_theta = 64, int n_phi = 64);

}  // namespace diracband::boundary
