#pragma once

#include <vector>

namespace diracband::specfun {

/// Positive half-integer Bessel order, stored as 2*nu.
struct HalfIntOrder {
  int two_nu;

  static HalfIntOrder from_twice(int two_nu);
  static HalfIntOrder l_plus_half(int l) { return from_twice(2 * l + 1); }
  static HalfIntOrder l_plus_three_halves(int l) { return from_twice(2 * l + 3); }

  double value() const { return 0.5 * two_nu; }
  // Index i such that nu = i + 1/2.
  int index() const { return (two_nu - 1) / 2; }
};

// J_nu(x), x > 0.  Closed-form seeds at nu = +-1/2 with upward recurrence for
// x >= nu; Miller backward recurrence otherwise.
double bessel_J(HalfIntOrder nu, double x);

// I_nu(x), x > 0.  Throws std::overflow_error once e^x leaves the exponent range.
double bessel_I(HalfIntOrder nu, double x);

// e^{-x} I_nu(x); safe for any x > 0.  Dispersion ratios are formed from these.
double bessel_I_scaled(HalfIntOrder nu, double x);

// Regularized power series: I_nu(z) = (z/2)^nu IP_nu(z), entire, IP_nu(0) = 1/Gamma(nu+1).
double bessel_IP(HalfIntOrder nu, double z);
double bessel_JP(HalfIntOrder nu, double z);

// First n positive zeros of J_nu, each to 1e-12 absolute.
std::vector<double> bessel_zeros(HalfIntOrder nu, int n);

// Gamma(a) for a = two_a/2 with two_a odd positive, via Gamma(1/2) = sqrt(pi).
double gamma_half(int two_a);

}  // namespace diracband::specfun
