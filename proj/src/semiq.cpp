#include "diracband/semiq.hpp"

#include <cmath>
#include <stdexcept>

#include "diracband/quadrature.hpp"

namespace diracband::semiq {

namespace {

constexpr double kPi = 3.14159265358979323846;
const Complex kI(0.0, 1.0);

}  // namespace

Mat2 pauli_dot(const Vec3& k) {
  Mat2 m;
  m << Complex(k[2], 0.0), Complex(k[0], -k[1]), Complex(k[0], k[1]), Complex(-k[2], 0.0);
  return m;
}

SemiQuantumState k_hamiltonian(const Vec3& k, double mu) {
  SemiQuantumState s;
  s.k = k;
  s.mu = mu;
  const Mat2 ks = pauli_dot(k);
  s.matrix.setZero();
  s.matrix.block<2, 2>(0, 0) = mu * Mat2::Identity();
  s.matrix.block<2, 2>(2, 2) = -mu * Mat2::Identity();
  s.matrix.block<2, 2>(0, 2) = -kI * ks;
  s.matrix.block<2, 2>(2, 0) = kI * ks;
  const double lam = std::sqrt(mu * mu + k.squaredNorm());
  s.lambda_plus = lam;
  s.lambda_minus = -lam;
  if (lam == 0.0) {
    s.projector_plus = 0.5 * Mat4::Identity();
    s.projector_minus = 0.5 * Mat4::Identity();
  } else {
    s.projector_plus = (lam * Mat4::Identity() + s.matrix) / (2.0 * lam);
    s.projector_minus = (-lam * Mat4::Identity() + s.matrix) / (-2.0 * lam);
  }
  return s;
}

Frame42 eigenvectors(const SemiQuantumState& state, Gauge gauge, int band_sign) {
  const double lam = band_sign > 0 ? state.lambda_plus : state.lambda_minus;
  const Vec3& k = state.k;
  const double mu = state.mu;
  Frame42 frame;
  if (gauge == Gauge::Up) {
    const double n2 = 2.0 * lam * (lam - mu);
    if (!(n2 > 1e-280))
      throw std::domain_error("eigenvectors: exceptional point of the up gauge");
    const double n = std::sqrt(n2);
    frame.col(0) << Complex(k[2], 0.0) / n, Complex(k[0], k[1]) / n,
        kI * (lam - mu) / n, Complex(0.0, 0.0);
    frame.col(1) << Complex(k[0], -k[1]) / n, Complex(-k[2], 0.0) / n,
        Complex(0.0, 0.0), kI * (lam - mu) / n;
  } else {
    const double n2 = 2.0 * lam * (lam + mu);
    if (!(n2 > 1e-280))
      throw std::domain_error("eigenvectors: exceptional point of the down gauge");
    const double n = std::sqrt(n2);
    frame.col(0) << -kI * (lam + mu) / n, Complex(0.0, 0.0), Complex(k[2], 0.0) / n,
        Complex(k[0], k[1]) / n;
    frame.col(1) << Complex(0.0, 0.0), -kI * (lam + mu) / n, Complex(k[0], -k[1]) / n,
        Complex(-k[2], 0.0) / n;
  }
  return frame;
}

Mat2 transition_matrix(const Vec3& k, int band_sign) {
  const double kn = k.norm();
  if (kn == 0.0) throw std::domain_error("transition_matrix: undefined at k = 0");
  const Complex phase = band_sign > 0 ? -kI : kI;
  return phase / kn * pauli_dot(k);
}

std::pair<Mat4, Mat4> q_matrices(const SemiQuantumState& state) {
  if (state.lambda_plus == 0.0)
    throw std::domain_error("q_matrices: degenerate origin (k, mu) = (0, 0)");
  return {state.matrix / state.lambda_plus, state.matrix / state.lambda_minus};
}

Mat4 off_diagonalize(const Mat4& q) {
  Mat4 g = Mat4::Zero();
  const double s = 1.0 / std::sqrt(2.0);
  g.block<2, 2>(0, 0) = s * Mat2::Identity();
  g.block<2, 2>(0, 2) = s * Mat2::Identity();
  g.block<2, 2>(2, 0) = s * Mat2::Identity();
  g.block<2, 2>(2, 2) = -s * Mat2::Identity();
  return g * q * g;  // g is its own inverse
}

S3Point map_q(int sign, const Vec3& k, double mu) {
  const double n2 = k.squaredNorm() + mu * mu;
  if (n2 == 0.0) throw std::domain_error("map_q: undefined at the origin");
  const double n = std::sqrt(n2);
  S3Point p;
  p.z1 = Complex(k[0], k[1]) / n;
  p.z2 = Complex(k[2], sign > 0 ? mu : -mu) / n;
  return p;
}

Mat2 map_h(int sign, const Vec3& k, double mu) {
  const double n2 = k.squaredNorm() + mu * mu;
  if (n2 == 0.0) throw std::domain_error("map_h: undefined at the origin");
  const double n = std::sqrt(n2);
  const Complex imu = kI * (sign > 0 ? mu : -mu);
  return (pauli_dot(k) + imu * Mat2::Identity()) / n;
}

DegreeReport degree_analytic(int sign, double mu) {
  if (mu == 0.0) throw std::domain_error("degree_analytic: undefined at mu = 0");
  DegreeReport rep;
  rep.method = DegreeMethod::Analytic;
  rep.mu = mu;
  rep.value = 0.5 * (sign > 0 ? 1.0 : -1.0) * (mu > 0.0 ? 1.0 : -1.0);
  rep.raw_integral = 2.0 * kPi * kPi * rep.value;
  rep.error_estimate = 0.0;
  return rep;
}

namespace {

// 4 pi mu_eff * integral of k^2/(k^2+mu^2)^2, by one of the two layouts.
double pullback_integral(double mu_eff, const QuadratureParams& p, int n_radial) {
  const double amu = std::abs(mu_eff);
  double sphere = 4.0 * kPi;
  if (p.n_angular > 0) {
    GaussLegendre gth = gauss_legendre(p.n_angular, -1.0, 1.0);
    double acc = 0.0;
    for (double w : gth.w) acc += w;
    sphere = acc * 2.0 * kPi;
  }
  double radial = 0.0;
  if (p.tan_substitution) {
    GaussLegendre g = gauss_legendre(n_radial, 0.0, 0.5 * kPi);
    for (int i = 0; i < n_radial; ++i) {
      const double s = std::sin(g.x[i]);
      radial += g.w[i] * s * s;
    }
    radial /= amu;
  } else {
    GaussLegendre g = gauss_legendre(n_radial, 0.0, p.k_max);
    for (int i = 0; i < n_radial; ++i) {
      const double k = g.x[i];
      const double d = k * k + mu_eff * mu_eff;
      radial += g.w[i] * k * k / (d * d);
    }
    // analytic tail mu (F(inf) - F(k_max)), F from the exact primitive
    const double K = p.k_max;
    const double fK = -K / (2.0 * (K * K + mu_eff * mu_eff)) +
                      std::atan(K / amu) / (2.0 * amu);
    radial += kPi / (4.0 * amu) - fK;
  }
  return sphere * mu_eff * radial;
}

}  // namespace

DegreeReport degree_quadrature(int sign, double mu, const QuadratureParams& params) {
  if (mu == 0.0) throw std::domain_error("degree_quadrature: undefined at mu = 0");
  if (!params.tan_substitution && params.k_max < 10.0 * std::abs(mu))
    throw std::invalid_argument("degree_quadrature: k_max must be >= 10 |mu|");
  const double mu_eff = sign > 0 ? mu : -mu;
  DegreeReport rep;
  rep.method = DegreeMethod::Quadrature;
  rep.mu = mu;
  rep.raw_integral = pullback_integral(mu_eff, params, params.n_radial);
  const double coarse = pullback_integral(mu_eff, params, std::max(8, params.n_radial / 2));
  rep.value = rep.raw_integral / (2.0 * kPi * kPi);
  rep.error_estimate = std::abs(rep.raw_integral - coarse) / (2.0 * kPi * kPi) + 1e-14;
  return rep;
}

double trace_form_density(const Vec3& k, double mu, double h) {
  // Orientation fixed by the S^3 area-form convention: the current is
  // h d(h^dag), whose antisymmetrized trace equals 12 mu/(k^2+mu^2)^2.
  Mat2 hc = map_h(+1, k, mu);
  Mat2 a[3];
  for (int d = 0; d < 3; ++d) {
    Vec3 kp = k, km = k;
    kp[d] += h;
    km[d] -= h;
    Mat2 dh = (map_h(+1, kp, mu) - map_h(+1, km, mu)) / (2.0 * h);
    a[d] = hc * dh.adjoint();
  }
  const Mat2 comm = a[0] * a[1] - a[1] * a[0];
  return 3.0 * (comm * a[2]).trace().real();
}

namespace {

double trace_form_sum(double mu, double h, double L) {
  const int n = static_cast<int>(std::llround(L / h));
  double acc = 0.0;
  for (int i = -n; i <= n; ++i) {
    double plane = 0.0;
    for (int j = -n; j <= n; ++j) {
      for (int l = -n; l <= n; ++l) {
        plane += trace_form_density(Vec3(i * h, j * h, l * h), mu, h);
      }
    }
    acc += plane;
  }
  return acc * h * h * h;
}

double cube_integral(double mu, double L, int nodes) {
  GaussLegendre g = gauss_legendre(nodes, -L, L);
  double acc = 0.0;
  for (int i = 0; i < nodes; ++i)
    for (int j = 0; j < nodes; ++j)
      for (int l = 0; l < nodes; ++l) {
        const double k2 = g.x[i] * g.x[i] + g.x[j] * g.x[j] + g.x[l] * g.x[l];
        const double d = k2 + mu * mu;
        acc += g.w[i] * g.w[j] * g.w[l] / (d * d);
      }
  return acc;
}

}  // namespace

DegreeReport degree_trace_form(double mu, const TraceFormParams& params) {
  if (mu == 0.0) throw std::domain_error("degree_trace_form: undefined at mu = 0");
  const double h = params.grid_step > 0.0
                       ? params.grid_step
                       : std::min(0.05, std::abs(mu) / 20.0);
  const double L = params.box_halfwidth > 0.0 ? params.box_halfwidth
                                              : std::max(2.5, 5.0 * std::abs(mu));
  const double grid_part = trace_form_sum(mu, h, L);
  const double coarse_part = trace_form_sum(mu, 2.0 * h, L);
  // analytic tail of the identity integrand outside the cube
  const double whole = kPi * kPi / std::abs(mu);
  const double tail = 12.0 * mu * (whole - cube_integral(mu, L, params.tail_nodes));
  DegreeReport rep;
  rep.method = DegreeMethod::TraceForm;
  rep.mu = mu;
  rep.raw_integral = grid_part + tail;
  rep.value = rep.raw_integral / (24.0 * kPi * kPi);
  rep.error_estimate =
      std::abs(grid_part - coarse_part) / (3.0 * 24.0 * kPi * kPi) + 1e-10;
  if (rep.error_estimate > 0.5)
    throw std::runtime_error("degree_trace_form: grid too coarse");
  return rep;
}

CrossingReport eigenspace_crossing_check(const std::vector<double>& mu_sequence) {
  CrossingReport rep;
  double worst = 0.0;
  for (double mu : mu_sequence) {
    if (mu == 0.0) continue;
    SemiQuantumState s = k_hamiltonian(Vec3::Zero(), mu);
    Mat4 want = Mat4::Zero();
    if (mu > 0.0) {
      want(0, 0) = want(1, 1) = 1.0;
    } else {
      want(2, 2) = want(3, 3) = 1.0;
    }
    worst = std::max(worst, (s.projector_plus - want).cwiseAbs().maxCoeff());
  }
  rep.projector_limit_residual = worst;
  double min_gap = 1e300;
  for (double mu : mu_sequence) {
    for (double kz : {0.3, 1.0, 2.0}) {
      SemiQuantumState s = k_hamiltonian(Vec3(kz, -0.5 * kz, 0.25), mu);
      min_gap = std::min(min_gap, s.lambda_plus - s.lambda_minus);
    }
  }
  rep.min_gap_offcenter = min_gap;
  rep.passed = worst < 1e-6 && min_gap > 0.5;
  return rep;
}

}  // namespace diracband::semiq
