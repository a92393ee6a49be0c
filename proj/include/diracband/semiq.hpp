#pragma once

#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "diracband/types.hpp"

namespace diracband::semiq {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec3 = Eigen::Vector3d;
using Frame42 = Eigen::Matrix<Complex, 4, 2>;

/// The 4x4 Hermitian matrix K_mu(k) with its spectral data.
struct SemiQuantumState {
  Vec3 k;
  double mu = 0.0;
  Mat4 matrix;
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
  Mat4 projector_plus;
  Mat4 projector_minus;
};

Mat2 pauli_dot(const Vec3& k);

SemiQuantumState k_hamiltonian(const Vec3& k, double mu);

enum class Gauge { Up, Down };

// Orthonormal 2-frame of the +-1 eigenspace in the chosen gauge.  Throws
// std::domain_error at the gauge's exceptional point (and at k = 0, mu = 0).
Frame42 eigenvectors(const SemiQuantumState& state, Gauge gauge, int band_sign);

// Gauge transition matrices: U+ = -i (k.sigma)/k, U- = +i (k.sigma)/k.
Mat2 transition_matrix(const Vec3& k, int band_sign);

// Q+- = K / lambda+-; throws at (k, mu) = (0, 0).
std::pair<Mat4, Mat4> q_matrices(const SemiQuantumState& state);

// Conjugation by g = h (x) 1 with h = [[1,1],[1,-1]]/sqrt(2); block
// off-diagonalizes the Q matrices.
Mat4 off_diagonalize(const Mat4& q);

/// A point of S^3 as a unit vector of C^2; x() gives the R^4 coordinates
/// via (x1 + i x2, x3 + i x4).
struct S3Point {
  Complex z1{0.0, 0.0};
  Complex z2{0.0, 0.0};
  std::array<double, 4> x() const {
    return {z1.real(), z1.imag(), z2.real(), z2.imag()};
  }
};

// q+-(k) = (k1 + i k2, k3 +- i mu) / sqrt(k^2 + mu^2); undefined at the origin.
S3Point map_q(int sign, const Vec3& k, double mu);

// h+-(k) = (k.sigma +- i mu) / sqrt(k^2 + mu^2) in SU(2).
Mat2 map_h(int sign, const Vec3& k, double mu);

enum class DegreeMethod { Analytic, Quadrature, TraceForm };

struct DegreeReport {
  DegreeMethod method = DegreeMethod::Analytic;
  double value = 0.0;
  double error_estimate = 0.0;
  double mu = 0.0;
  double raw_integral = 0.0;  // integral of the pulled-back area form
};

// nu[q+-] = +-(1/2) sgn(mu) exactly; throws std::domain_error at mu = 0.
DegreeReport degree_analytic(int sign, double mu);

struct QuadratureParams {
  double k_max = 200.0;
  int n_radial = 200;
  int n_angular = 0;      // 0: analytic 4 pi sphere factor
  bool tan_substitution = true;  // false: truncate at k_max and add the tail
};

DegreeReport degree_quadrature(int sign, double mu, const QuadratureParams& params = {});

struct TraceFormParams {
  double grid_step = 0.0;      // 0: min(0.05, |mu|/20)
  double box_halfwidth = 0.0;  // 0: max(2.5, 5 |mu|)
  int tail_nodes = 48;         // per axis, for the cube integral in the tail term
};

// Discrete (1/24 pi^2) tr((h+^dag dh+)^3) over a grid cube plus the analytic
// tail outside the cube; independent of the pullback simplification.
DegreeReport degree_trace_form(double mu, const TraceFormParams& params = {});

// Pointwise value of the discrete trace-form integrand density at k.
double trace_form_density(const Vec3& k, double mu, double h);

struct CrossingReport {
  double projector_limit_residual = 0.0;  // P+(0, mu -> 0-+) against the joined spans
  double min_gap_offcenter = 0.0;         // min over sampled k != 0 of lambda+ - lambda-
  bool passed = false;
};

CrossingReport eigenspace_crossing_check(const std::vector<double>& mu_sequence);

}  // namespace diracband::semiq
