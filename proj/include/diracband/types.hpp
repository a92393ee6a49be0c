#pragma once

#include <stdexcept>

namespace diracband {

// The two 4-spinor layouts: Phi pairs (f Phi^{j(+)}, g Phi^{j(-)}),
// Psi pairs (f Phi^{j(-)}, g Phi^{j(+)}).  They carry opposite P eigenvalue.
enum class SpinorType { Phi, Psi };

/// Conserved quantum-number block on which every radial problem lives.
struct AngularSector {
  int two_j = 1;  // 2j, odd positive
  int two_m = 1;  // 2m, odd, |2m| <= 2j
  SpinorType type = SpinorType::Phi;

  AngularSector() = default;
  AngularSector(int tj, int tm, SpinorType t) : two_j(tj), two_m(tm), type(t) {
    if (two_j < 1 || two_j % 2 == 0) throw std::invalid_argument("AngularSector: 2j must be odd and positive");
    if (two_m % 2 == 0 || std::abs(two_m) > two_j) throw std::invalid_argument("AngularSector: bad 2m");
  }

  double j() const { return 0.5 * two_j; }
  double m() const { return 0.5 * two_m; }
  int l() const { return (two_j - 1) / 2; }
  // Eigenvalue sign of P = diag(sigma.L + 1, -(sigma.L + 1)).
  int p_sign() const { return type == SpinorType::Phi ? +1 : -1; }
};

enum class BoundaryKind { ApsMinus, ApsPlus, ChiralBag };

/// One eigenvalue problem: boundary condition, sector, ball radius,
/// and the chiral-bag parameter lambda (ignored for APS).
struct ProblemSpec {
  BoundaryKind bc = BoundaryKind::ApsMinus;
  AngularSector sector;
  double R = 1.0;
  double chiral_lambda = 0.0;

  ProblemSpec() = default;
  ProblemSpec(BoundaryKind b, AngularSector s, double radius, double lambda = 0.0)
      : bc(b), sector(s), R(radius), chiral_lambda(lambda) {
    if (!(R > 0.0)) throw std::invalid_argument("ProblemSpec: R must be positive");
  }
};

}  // namespace diracband
