#include "diracband/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "diracband/boundary.hpp"
#include "diracband/dispersion.hpp"

namespace diracband::symmetry {

using semiq::Complex;
using semiq::Mat2;
using semiq::Mat4;
using semiq::Vec3;

namespace {

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

Mat2 sigma(int i) {
  Mat2 m;
  switch (i) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

SymmetryCheck make_check(std::string name, std::string target, double residual,
                         double tol = 1e-12) {
  SymmetryCheck c;
  c.name = std::move(name);
  c.target = std::move(target);
  c.residual = residual;
  c.passed = residual <= tol;
  return c;
}

double mdiff(const Mat4& a, const Mat4& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

std::vector<SymmetryCheck> check_k_symmetries(const Vec3& k, double mu) {
  std::vector<SymmetryCheck> out;
  const Mat4 K = semiq::k_hamiltonian(k, mu).matrix;
  const Mat4 Kneg = semiq::k_hamiltonian(-k, mu).matrix;
  const Complex i(0, 1);

  const Mat4 T = kron(sigma(0), i * sigma(2));
  const Mat4 C = kron(sigma(1), i * sigma(2));
  const Mat4 S = kron(sigma(1), sigma(0));
  const Mat4 P = kron(sigma(3), sigma(0));

  out.push_back(make_check("TRS", "SemiQuantumK",
                           mdiff(T * K.conjugate() * T.adjoint(), K)));
  out.push_back(make_check("PHS", "SemiQuantumK",
                           mdiff(C * K.conjugate() * C.adjoint(), -K)));
  out.push_back(make_check("Chiral", "SemiQuantumK", mdiff(S * K * S, -K)));
  out.push_back(make_check("Inversion", "SemiQuantumK", mdiff(P * K * P, Kneg)));

  // quantum-side identities pick up the momentum inversion
  const Mat4 Tq = kron(sigma(3), i * sigma(2));
  const Mat4 Cq = kron(sigma(2), sigma(2));
  out.push_back(make_check("TRS_quantum", "SemiQuantumK",
                           mdiff(Tq * K.conjugate() * Tq.adjoint(), Kneg)));
  out.push_back(make_check("PHS_quantum", "SemiQuantumK",
                           mdiff(Cq * K.conjugate() * Cq.adjoint(), -Kneg)));

  // squared antiunitaries: (T K_c)^2 = T conj(T); both equal minus the identity
  out.push_back(make_check("TRS_squared_minus_id", "SemiQuantumK",
                           mdiff(T * T.conjugate(), -Mat4::Identity())));
  out.push_back(make_check("PHS_squared_minus_id", "SemiQuantumK",
                           mdiff(C * C.conjugate(), -Mat4::Identity())));
  return out;
}

std::vector<SymmetryCheck> check_boundary_symmetries(const AngularSector& sector,
                                                     double mu, double R) {
  std::vector<SymmetryCheck> out;
  const int l = sector.l();
  auto bphi = boundary::sector_matrix(SpinorType::Phi, l, mu, R);
  auto bpsi = boundary::sector_matrix(SpinorType::Psi, l, mu, R);
  auto swap_conj = [&](const boundary::Mat2& m, bool conj) {
    boundary::Mat2 r{};
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        r[a][b] = conj ? std::conj(m[1 - a][1 - b]) : m[1 - a][1 - b];
    return r;
  };
  auto diff2 = [](const boundary::Mat2& a, const boundary::Mat2& b) {
    double w = 0.0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) w = std::max(w, std::abs(a[i][j] - b[i][j]));
    return w;
  };

  // chiral operator swaps the two layouts
  double rc = diff2(swap_conj(bphi, false), bpsi);
  out.push_back(make_check("Chiral", "BoundaryB", rc, 1e-13));

  // time reversal: the sector blocks are real (and m never enters them)
  double rt = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) rt = std::max(rt, std::abs(std::imag(bphi[a][b])));
  out.push_back(make_check("TRS", "BoundaryB", rt, 1e-13));

  // particle-hole: conjugated layout swap
  double rp = diff2(swap_conj(bphi, true), bpsi);
  out.push_back(make_check("PHS", "BoundaryB", rp, 1e-13));

  // eigenvalue match lambda = kappa and the mapped (-) eigenvector
  auto ephi = boundary::aps_boundary_eigen(
      AngularSector(sector.two_j, sector.two_m, SpinorType::Phi), mu, R);
  auto epsi = boundary::aps_boundary_eigen(
      AngularSector(sector.two_j, sector.two_m, SpinorType::Psi), mu, R);
  double re = std::max(std::abs(ephi.lambda_plus - epsi.lambda_plus),
                       std::abs(ephi.lambda_minus - epsi.lambda_minus));
  out.push_back(make_check("EigenvalueMatch", "BoundaryB", re, 1e-13));

  // X v_phi^(-) parallel to v_psi^(-): normalized cross product
  double cx = ephi.coeff_minus[1] * epsi.coeff_minus[1] -
              ephi.coeff_minus[0] * epsi.coeff_minus[0];
  double n1 = std::hypot(ephi.coeff_minus[0], ephi.coeff_minus[1]);
  double n2 = std::hypot(epsi.coeff_minus[0], epsi.coeff_minus[1]);
  out.push_back(make_check("ChiralMapsMinusEigvec", "BoundaryB",
                           std::abs(cx) / (n1 * n2), 1e-13));
  return out;
}

double root_set_distance(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  for (size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

std::vector<double> all_roots(const ProblemSpec& spec, double mu, int n_bulk) {
  std::vector<double> roots = dispersion::edge_roots(spec, mu);
  for (int esign : {-1, +1}) {
    auto b = dispersion::bulk_roots(spec, mu, n_bulk, esign);
    roots.insert(roots.end(), b.begin(), b.end());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

SymmetryCheck check_spectrum_mirror_aps(const std::vector<SpectrumPair>& pairs) {
  double worst = 0.0;
  for (const auto& p : pairs) {
    std::vector<double> mirrored;
    mirrored.reserve(p.phi.size());
    for (double e : p.phi) mirrored.push_back(-e);
    worst = std::max(worst, root_set_distance(mirrored, p.psi));
  }
  return make_check("SpectrumMirror", "SpectrumAPS", worst, 1e-9);
}

SymmetryCheck check_chiral_lambda_reflection(int l, double R, double lambda,
                                             const std::vector<double>& mus, int n_bulk) {
  double worst = 0.0;
  for (double mu : mus) {
    std::vector<double> plus, minus_neg;
    for (auto type : {SpinorType::Phi, SpinorType::Psi}) {
      ProblemSpec sp(BoundaryKind::ChiralBag, AngularSector(2 * l + 1, 1, type), R, lambda);
      ProblemSpec sm(BoundaryKind::ChiralBag, AngularSector(2 * l + 1, 1, type), R, -lambda);
      auto a = all_roots(sp, mu, n_bulk);
      auto b = all_roots(sm, mu, n_bulk);
      plus.insert(plus.end(), a.begin(), a.end());
      for (double e : b) minus_neg.push_back(-e);
    }
    worst = std::max(worst, root_set_distance(plus, minus_neg));
  }
  return make_check("LambdaReflection", "SpectrumChiral", worst, 1e-9);
}

double chiral_self_asymmetry(int l, double R, double lambda, double mu, int n_bulk) {
  std::vector<double> roots, negated;
  for (auto type : {SpinorType::Phi, SpinorType::Psi}) {
    ProblemSpec sp(BoundaryKind::ChiralBag, AngularSector(2 * l + 1, 1, type), R, lambda);
    auto a = all_roots(sp, mu, n_bulk);
    roots.insert(roots.end(), a.begin(), a.end());
  }
  for (double e : roots) negated.push_back(-e);
  double d = root_set_distance(roots, negated);
  return std::isfinite(d) ? d : 1.0;
}

}  // namespace diracband::symmetry
