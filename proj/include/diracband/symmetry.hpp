#pragma once

#include <string>
#include <vector>

#include "diracband/semiq.hpp"
#include "diracband/types.hpp"

namespace diracband::symmetry {

struct SymmetryCheck {
  std::string name;
  std::string target;
  double residual = 0.0;
  bool passed = false;
};

// Residuals of the discrete-symmetry identities of K_mu(k): time reversal,
// particle-hole, chiral, momentum inversion, their quantum-side versions (with
// k -> -k), and the squared-antiunitary signs.
std::vector<SymmetryCheck> check_k_symmetries(const semiq::Vec3& k, double mu);

// Identities of the boundary operator realized on the 2x2 sector blocks:
// the chiral operator swaps the layouts with matching eigenvalues, time
// reversal reduces to realness, particle-hole to the conjugated swap.
std::vector<SymmetryCheck> check_boundary_symmetries(const AngularSector& sector,
                                                     double mu, double R);

// Optimal matching distance of two sorted root sets; inf on a size mismatch.
double root_set_distance(std::vector<double> a, std::vector<double> b);

// Edge roots plus the first n_bulk bulk roots per energy sign.
std::vector<double> all_roots(const ProblemSpec& spec, double mu, int n_bulk);

struct SpectrumPair {
  double mu = 0.0;
  std::vector<double> phi;
  std::vector<double> psi;
};

// APS mirror: the Psi root set must equal the negated Phi root set at each mu.
SymmetryCheck check_spectrum_mirror_aps(const std::vector<SpectrumPair>& pairs);

// Chiral bag: the spectrum at lambda equals the negated spectrum at -lambda.
SymmetryCheck check_chiral_lambda_reflection(int l, double R, double lambda,
                                             const std::vector<double>& mus, int n_bulk);

// Demonstrates the absence of the E -> -E symmetry at fixed lambda != 0:
// returns the (large) asymmetry distance of the full spectrum at one mu.
double chiral_self_asymmetry(int l, double R, double lambda, double mu, int n_bulk);

}  // namespace diracband::symmetry
