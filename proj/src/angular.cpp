#include "diracband/angular.hpp"

#include <cmath>
#include <stdexcept>

#include "diracband/quadrature.hpp"

namespace diracband::angular {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Normalized associated Legendre S_l^n (n >= 0, no Condon-Shortley phase):
// S_l^n = sqrt((2l+1)/(4pi) (l-n)!/(l+n)!) P_l^n(cos theta),
// by stable upward recurrence in degree at fixed order.
double norm_assoc_legendre(int l, int n, double ct, double st) {
  // S_n^n
  double s = std::sqrt(1.0 / (4.0 * kPi));
  for (int m = 1; m <= n; ++m) s *= st * std::sqrt((2.0 * m + 1.0) / (2.0 * m));
  if (l == n) return s;
  // S_{n+1}^n
  double s1 = ct * std::sqrt(2.0 * n + 3.0) * s;
  if (l == n + 1) return s1;
  for (int deg = n + 2; deg <= l; ++deg) {
    double a = std::sqrt((4.0 * deg * deg - 1.0) / (double(deg) * deg - double(n) * n));
    double b = std::sqrt((double(deg - 1) * (deg - 1) - double(n) * n) /
                         (4.0 * double(deg - 1) * (deg - 1) - 1.0));
    double s2 = a * (ct * s1 - b * s);
    s = s1;
    s1 = s2;
  }
  return s1;
}

}  // namespace

Complex spherical_harmonic(int l, int n, double theta, double phi) {
  if (l < 0 || std::abs(n) > l) throw std::out_of_range("spherical_harmonic: |n| > l");
  const double ct = std::cos(theta), st = std::sin(theta);
  const int an = std::abs(n);
  double s = norm_assoc_legendre(l, an, ct, st);
  // Condon-Shortley phase lives on n >= 0 only; Y_l^{-n} = S_l^n e^{-i n phi}.
  double amp = (n >= 0 && n % 2 != 0) ? -s : s;
  return amp * std::exp(Complex(0.0, n * phi));
}

TwoSpinor spinor_harmonic(const AngularSector& sector, HarmonicBranch branch,
                          double theta, double phi) {
  const double j = sector.j(), m = sector.m();
  const int n_up = (sector.two_m - 1) / 2;  // m - 1/2
  const int n_dn = (sector.two_m + 1) / 2;  // m + 1/2
  TwoSpinor out;
  if (branch == HarmonicBranch::Plus) {
    const int l = sector.l();  // j - 1/2
    double c1 = std::sqrt((j + m) / (2.0 * j));
    double c2 = std::sqrt((j - m) / (2.0 * j));
    if (c1 != 0.0) out.up = c1 * spherical_harmonic(l, n_up, theta, phi);
    if (c2 != 0.0) out.dn = c2 * spherical_harmonic(l, n_dn, theta, phi);
  } else {
    const int l = sector.l() + 1;  // j + 1/2
    double c1 = std::sqrt((j - m + 1.0) / (2.0 * j + 2.0));
    double c2 = std::sqrt((j + m + 1.0) / (2.0 * j + 2.0));
    out.up = c1 * spherical_harmonic(l, n_up, theta, phi);
    out.dn = -c2 * spherical_harmonic(l, n_dn, theta, phi);
  }
  return out;
}

namespace {

constexpr double kFdStep = 1e-5;

struct Derivatives {
  TwoSpinor f, d_theta, d_phi;
};

Derivatives central_diff(const std::function<TwoSpinor(double, double)>& field,
                         double theta, double phi) {
  Derivatives d;
  d.f = field(theta, phi);
  TwoSpinor tp = field(theta + kFdStep, phi);
  TwoSpinor tm = field(theta - kFdStep, phi);
  TwoSpinor pp = field(theta, phi + kFdStep);
  TwoSpinor pm = field(theta, phi - kFdStep);
  const Complex inv2h(1.0 / (2.0 * kFdStep), 0.0);
  d.d_theta = (tp - tm) * inv2h;
  d.d_phi = (pp - pm) * inv2h;
  return d;
}

}  // namespace

TwoSpinor apply_sigma_dot_L_field(
    const std::function<TwoSpinor(double, double)>& field, double theta, double phi) {
  if (std::abs(std::sin(theta)) < 1e-8)
    throw std::domain_error("apply_sigma_dot_L: too close to a pole");
  Derivatives d = central_diff(field, theta, phi);
  const Complex i(0.0, 1.0);
  const double cot = std::cos(theta) / std::sin(theta);
  // L3 = -i d/dphi, L+ = e^{i phi}(d/dtheta + i cot d/dphi),
  // L- = -e^{-i phi}(d/dtheta - i cot d/dphi)
  auto L3 = [&](const Complex& dphi) { return -i * dphi; };
  auto Lp = [&](const Complex& dtheta, const Complex& dphi) {
    return std::exp(i * phi) * (dtheta + i * cot * dphi);
  };
  auto Lm = [&](const Complex& dtheta, const Complex& dphi) {
    return -std::exp(-i * phi) * (dtheta - i * cot * dphi);
  };
  TwoSpinor out;
  out.up = L3(d.d_phi.up) + Lm(d.d_theta.dn, d.d_phi.dn);
  out.dn = Lp(d.d_theta.up, d.d_phi.up) - L3(d.d_phi.dn);
  return out;
}

TwoSpinor apply_sigma_dot_L(const AngularSector& sector, HarmonicBranch branch,
                            double theta, double phi) {
  auto field = [&](double t, double p) { return spinor_harmonic(sector, branch, t, p); };
  return apply_sigma_dot_L_field(field, theta, phi);
}

TwoSpinor apply_j3(const std::function<TwoSpinor(double, double)>& field,
                   double theta, double phi) {
  Derivatives d = central_diff(field, theta, phi);
  const Complex i(0.0, 1.0);
  TwoSpinor out;
  out.up = -i * d.d_phi.up + 0.5 * d.f.up;
  out.dn = -i * d.d_phi.dn - 0.5 * d.f.dn;
  return out;
}

TwoSpinor apply_sigma_r(const TwoSpinor& s, double theta, double phi) {
  const double ct = std::cos(theta), st = std::sin(theta);
  const Complex eip = std::exp(Complex(0.0, phi));
  TwoSpinor out;
  out.up = ct * s.up + st * std::conj(eip) * s.dn;
  out.dn = st * eip * s.up - ct * s.dn;
  return out;
}

Complex sphere_inner(const std::function<TwoSpinor(double, double)>& a,
                     const std::function<TwoSpinor(double, double)>& b,
                     int n_theta, int n_phi) {
  GaussLegendre gl = gauss_legendre(n_theta, -1.0, 1.0);
  Complex acc(0.0, 0.0);
  const double wphi = 2.0 * kPi / n_phi;
  for (int it = 0; it < n_theta; ++it) {
    const double theta = std::acos(gl.x[it]);
    for (int ip = 0; ip < n_phi; ++ip) {
      const double phi = ip * wphi;
      TwoSpinor va = a(theta, phi);
      TwoSpinor vb = b(theta, phi);
      acc += gl.w[it] * wphi * (std::conj(va.up) * vb.up + std::conj(va.dn) * vb.dn);
    }
  }
  return acc;
}

}  // namespace diracband::angular
