#pragma once

#include <complex>
#include <functional>

#include "diracband/types.hpp"

namespace diracband::angular {

using Complex = std::complex<double>;

/// A two-spinor value at one point of the sphere.
struct TwoSpinor {
  Complex up{0.0, 0.0};
  Complex dn{0.0, 0.0};

  TwoSpinor operator+(const TwoSpinor& o) const { return {up + o.up, dn + o.dn}; }
  TwoSpinor operator-(const TwoSpinor& o) const { return {up - o.up, dn - o.dn}; }
  TwoSpinor operator*(Complex c) const { return {c * up, c * dn}; }
  double norm2() const { return std::norm(up) + std::norm(dn); }
};

enum class HarmonicBranch { Plus, Minus };  // Phi^{j(+)} vs Phi^{j(-)}

// Y_l^n(theta, phi); throws std::out_of_range if |n| > l.
Complex spherical_harmonic(int l, int n, double theta, double phi);

// Phi^{j(+)}_m (Plus) or Phi^{j(-)}_m (Minus) at (theta, phi).
TwoSpinor spinor_harmonic(const AngularSector& sector, HarmonicBranch branch,
                          double theta, double phi);

// sigma.L applied to the spinor harmonic, evaluated by central finite
// differences with step 1e-5 rad.  Throws std::domain_error within 1e-8 of a pole.
TwoSpinor apply_sigma_dot_L(const AngularSector& sector, HarmonicBranch branch,
                            double theta, double phi);

// Same finite-difference machinery for an arbitrary spinor field.
TwoSpinor apply_sigma_dot_L_field(
    const std::function<TwoSpinor(double, double)>& field, double theta, double phi);

// J3 = L3 + sigma3/2 applied by finite differences.
TwoSpinor apply_j3(const std::function<TwoSpinor(double, double)>& field,
                   double theta, double phi);

// Exact pointwise action of sigma_r.
TwoSpinor apply_sigma_r(const TwoSpinor& s, double theta, double phi);

// <a, b> over S^2 by Gauss-Legendre x uniform-phi quadrature.
Complex sphere_inner(const std::function<TwoSpinor(double, double)>& a,
                     const std::function<TwoSpinor(double, double)>& b,
                     int n_theta = 64, int n_phi = 64);

}  // namespace diracband::angular
