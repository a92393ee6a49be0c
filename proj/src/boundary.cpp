#include "diracband/boundary.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "diracband/angular.hpp"
#include "diracband/quadrature.hpp"

namespace diracband::boundary {

namespace {

constexpr double kPi = 3.14159265358979323846;

Mat2 mat2(Complex a, Complex b, Complex c, Complex d) {
  return Mat2{{{a, b}, {c, d}}};
}

Mat2 mul(const Mat2& A, const Mat2& B) {
  Mat2 out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out[i][j] = A[i][0] * B[0][j] + A[i][1] * B[1][j];
  return out;
}

double max_abs_diff(const Mat2& A, const Mat2& B) {
  double m = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m = std::max(m, std::abs(A[i][j] - B[i][j]));
  return m;
}

}  // namespace

Mat2 sector_matrix(SpinorType type, int l, double mu, double R) {
  if (!(R > 0.0)) throw std::invalid_argument("sector_matrix: R must be positive");
  const double s = -1.0 / R;
  if (type == SpinorType::Phi)
    return mat2(s * l, s * mu * R, s * mu * R, -s * (l + 2.0));
  return mat2(-s * (l + 2.0), s * mu * R, s * mu * R, s * l);
}

BoundaryEigenData aps_boundary_eigen(const AngularSector& sector, double mu, double R) {
  if (!(R > 0.0)) throw std::invalid_argument("aps_boundary_eigen: R must be positive");
  const int l = sector.l();
  const double root = std::sqrt((l + 1.0) * (l + 1.0) + mu * mu * R * R);
  BoundaryEigenData out;
  out.sector = sector;
  out.lambda_plus = (1.0 + root) / R;
  out.lambda_minus = (1.0 - root) / R;
  if (mu == 0.0) {
    // limiting pure states; lambda_minus -> -l/R, lambda_plus -> (l+2)/R
    out.lambda_minus = -static_cast<double>(l) / R;
    out.lambda_plus = (l + 2.0) / R;
    if (sector.type == SpinorType::Phi) {
      out.coeff_minus = {1.0, 0.0};
      out.coeff_plus = {0.0, 1.0};
    } else {
      out.coeff_plus = {1.0, 0.0};
      out.coeff_minus = {0.0, 1.0};
    }
    return out;
  }
  if (sector.type == SpinorType::Phi) {
    out.coeff_plus = {-mu * R, (l + 1.0) + root};
    out.coeff_minus = {-mu * R, (l + 1.0) - root};
  } else {
    out.coeff_plus = {-mu * R, -(l + 1.0) + root};
    out.coeff_minus = {-mu * R, -(l + 1.0) - root};
  }
  return out;
}

ExchangeReport gamma_r_exchange_check(const AngularSector& sector, double mu, double R,
                                      int n_angles, unsigned seed) {
  using angular::HarmonicBranch;
  using angular::TwoSpinor;
  ExchangeReport rep;

  BoundaryEigenData eig = aps_boundary_eigen(sector, mu, R);
  // gamma_r (a X_up, b X_dn) = (-i b sigma_r X_dn, i a sigma_r X_up); on the
  // sector pair sigma_r swaps the branch spinors, so the layout coefficients
  // map (a, b) -> (-i b, i a) regardless of layout.
  const Complex gp0(0.0, -eig.coeff_plus[1]);
  const Complex gp1(0.0, eig.coeff_plus[0]);

  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> uth(0.05, kPi - 0.05), uph(0.0, 2.0 * kPi);
  const HarmonicBranch up_branch =
      sector.type == SpinorType::Phi ? HarmonicBranch::Plus : HarmonicBranch::Minus;
  const HarmonicBranch dn_branch =
      sector.type == SpinorType::Phi ? HarmonicBranch::Minus : HarmonicBranch::Plus;

  Complex ratio0{0.0, 0.0};
  double spread = 0.0;
  bool have_ratio = false;
  for (int i = 0; i < n_angles; ++i) {
    double th = uth(rng), ph = uph(rng);
    TwoSpinor up = angular::spinor_harmonic(sector, up_branch, th, ph);
    TwoSpinor dn = angular::spinor_harmonic(sector, dn_branch, th, ph);
    // 4-spinor value of gamma_r Phi^(+) in the same layout basis
    TwoSpinor gu = angular::apply_sigma_r(dn, th, ph) * gp0;   // upper block
    TwoSpinor gl = angular::apply_sigma_r(up, th, ph) * gp1;   // lower block
    // target Phi^(-) 4-spinor
    TwoSpinor mu_up = up * Complex(eig.coeff_minus[0], 0.0);
    TwoSpinor mu_lo = dn * Complex(eig.coeff_minus[1], 0.0);
    // pointwise ratio wherever the target is nonzero
    for (auto [num, den] : {std::pair{gu.up, mu_up.up}, std::pair{gu.dn, mu_up.dn},
                            std::pair{gl.up, mu_lo.up}, std::pair{gl.dn, mu_lo.dn}}) {
      if (std::abs(den) < 1e-12) continue;
      Complex r = num / den;
      if (!have_ratio) {
        ratio0 = r;
        have_ratio = true;
      } else {
        spread = std::max(spread, std::abs(r - ratio0));
      }
    }
  }
  rep.proportionality_constant = ratio0;
  rep.proportionality_spread = spread;

  // sector-level gamma_r is the 2x2 matrix G = [[0, -i], [i, 0]]
  const Mat2 G = mat2({0, 0}, {0, -1}, {0, 1}, {0, 0});
  const Mat2 B = sector_matrix(sector.type, sector.l(), mu, R);
  Mat2 anti = mul(B, G);
  const Mat2 gb = mul(G, B);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) anti[i][j] += gb[i][j];
  Mat2 target = G;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) target[i][j] *= 2.0 / R;
  rep.anticommutation_defect = max_abs_diff(anti, target);

  rep.passed = spread < 1e-10 && rep.anticommutation_defect < 1e-13;
  return rep;
}

double boundary_current_mix(const AngularSector& sector, Complex c_upper, Complex c_lower,
                            int n_theta, int n_phi) {
  using angular::HarmonicBranch;
  using angular::TwoSpinor;
  const HarmonicBranch up_branch =
      sector.type == SpinorType::Phi ? HarmonicBranch::Plus : HarmonicBranch::Minus;
  const HarmonicBranch dn_branch =
      sector.type == SpinorType::Phi ? HarmonicBranch::Minus : HarmonicBranch::Plus;

  GaussLegendre gl = gauss_legendre(n_theta, -1.0, 1.0);
  const double wphi = 2.0 * kPi / n_phi;
  double current = 0.0, norm = 0.0;
  for (int it = 0; it < n_theta; ++it) {
    const double theta = std::acos(gl.x[it]);
    for (int ip = 0; ip < n_phi; ++ip) {
      const double phi = ip * wphi;
      TwoSpinor u = angular::spinor_harmonic(sector, up_branch, theta, phi) * c_upper;
      TwoSpinor lo = angular::spinor_harmonic(sector, dn_branch, theta, phi) * c_lower;
      TwoSpinor sr_lo = angular::apply_sigma_r(lo, theta, phi);
      // psi^dag gamma_r psi = -i u^dag sigma_r l + i l^dag sigma_r u = 2 Im(u^dag sigma_r l)
      Complex udag_sr_lo = std::conj(u.up) * sr_lo.up + std::conj(u.dn) * sr_lo.dn;
      const double w = gl.w[it] * wphi;
      current += w * 2.0 * udag_sr_lo.imag();
      norm += w * (u.norm2() + lo.norm2());
    }
  }
  if (norm == 0.0) return 0.0;
  return current / norm;
}

double boundary_current(const radial::RadialProfile& profile, double R,
                        int n_theta, int n_phi) {
  auto [f, g] = profile.eval(R);
  return boundary_current_mix(profile.sector, Complex(f, 0.0), Complex(g, 0.0),
                              n_theta, n_phi);
}

}  // namespace diracband::boundary
