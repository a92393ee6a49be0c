#include "diracband/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include <boost/numeric/odeint.hpp>

namespace diracband::oracle {

namespace {

using State = std::array<double, 2>;  // (f, g)

// Frobenius seed of the regular solution at small r, normalized so the
// leading coefficient of the r^l component is one.
State frobenius_seed(const ShootingProblem& p, double E, double r) {
  const int l = p.spec.sector.l();
  const double mu = p.mu;
  const int order = std::max(4, p.series_order);
  // Phi layout: f = sum a_k r^{l+k}, g = sum b_k r^{l+1+k} (k even),
  //   b_k = (mu - E) a_k / (2l + 3 + k), a_{k+2} = (E + mu) b_k / (k + 2).
  // Psi layout mirrors the roles of f and g.
  double lead = 1.0;   // coefficient of r^{l+k} series term
  double sub = 0.0;    // coefficient of r^{l+1+k}
  double flead = 0.0, fsub = 0.0;
  double rl = 1.0;     // r^k running power; overall r^l scaled out
  for (int k = 0; k <= order; k += 2) {
    sub = (mu - E) * lead / (2.0 * l + 3.0 + k);
    flead += lead * rl;
    fsub += sub * rl * r;
    rl *= r * r;
    lead = (E + mu) * sub / (k + 2.0);
  }
  if (p.spec.sector.type == SpinorType::Phi) return {flead, fsub};
  // For the Psi system g carries r^l and f carries r^{l+1}; the recursion is
  // the same with (E + mu) and (mu - E) swapped.
  double leadp = 1.0, subp = 0.0, glead = 0.0, gsub = 0.0;
  double rlp = 1.0;
  for (int k = 0; k <= order; k += 2) {
    subp = (E + mu) * leadp / (2.0 * l + 3.0 + k);
    glead += leadp * rlp;
    gsub += subp * rlp * r;
    rlp *= r * r;
    leadp = (mu - E) * subp / (k + 2.0);
  }
  return {gsub, glead};
}

struct RadialSystem {
  int l;
  double E, mu;
  bool phi;

  void operator()(const State& y, State& dy, double r) const {
    const double f = y[0], g = y[1];
    if (phi) {
      dy[0] = (l / r) * f + (E + mu) * g;
      dy[1] = -((l + 2.0) / r) * g + (mu - E) * f;
    } else {
      dy[0] = -((l + 2.0) / r) * f + (E + mu) * g;
      dy[1] = (l / r) * g + (mu - E) * f;
    }
  }
};

}  // namespace

double shoot(const ShootingProblem& p, double E) {
  namespace ode = boost::numeric::odeint;
  const double R = p.spec.R;
  const double r0 = R * p.r_start_frac;
  if (!(r0 > 0.0) || r0 > 1e-4 * R)
    throw std::invalid_argument("shoot: r_start must satisfy 0 < r_start <= 1e-4 R");

  State y = frobenius_seed(p, E, r0);
  RadialSystem sys{p.spec.sector.l(), E, p.mu, p.spec.sector.type == SpinorType::Phi};

  using Stepper = ode::runge_kutta_fehlberg78<State>;
  auto ctrl = ode::make_controlled<Stepper>(1e-14, 1e-12);
  ode::integrate_adaptive(ctrl, sys, y, r0, R, (R - r0) / 64.0);

  const double f = y[0], g = y[1];
  const double scale = std::abs(f) + std::abs(g);
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw std::runtime_error("shoot: integration lost the solution");

  const int l = p.spec.sector.l();
  switch (p.spec.bc) {
    case BoundaryKind::ApsMinus:
    case BoundaryKind::ApsPlus: {
      // B_mu eigenvector on this layout, written out so the oracle does not
      // touch the boundary module
      const double root = std::sqrt((l + 1.0) * (l + 1.0) + p.mu * p.mu * R * R);
      const double sgn = p.spec.bc == BoundaryKind::ApsMinus ? -1.0 : 1.0;
      double a, b;
      if (p.mu == 0.0) {
        if (p.spec.bc == BoundaryKind::ApsMinus) {
          a = p.spec.sector.type == SpinorType::Phi ? 1.0 : 0.0;
          b = p.spec.sector.type == SpinorType::Phi ? 0.0 : 1.0;
        } else {
          a = p.spec.sector.type == SpinorType::Phi ? 0.0 : 1.0;
          b = p.spec.sector.type == SpinorType::Phi ? 1.0 : 0.0;
        }
      } else if (p.spec.sector.type == SpinorType::Phi) {
        a = -p.mu * R;
        b = (l + 1.0) + sgn * root;
      } else {
        a = -p.mu * R;
        b = -(l + 1.0) + sgn * root;
      }
      const double en = std::sqrt(a * a + b * b);
      return (f * b - g * a) / (scale * en);
    }
    case BoundaryKind::ChiralBag: {
      const double el = std::exp(-p.spec.chiral_lambda);
      return (f - el * g) / (scale * (1.0 + el));
    }
  }
  return 0.0;
}

std::vector<double> oracle_eigenvalues(const ShootingProblem& p, int count,
                                       double e_lo, double e_hi) {
  std::vector<double> roots;
  if (!(e_hi > e_lo)) return roots;
  // expected root spacing is about pi/R; oversample by 8
  const double R = p.spec.R;
  int n = std::max(64, static_cast<int>(std::ceil((e_hi - e_lo) / (3.14159265 / R) * 8)));
  double prev_e = e_lo;
  double prev_f = shoot(p, prev_e);
  for (int i = 1; i <= n; ++i) {
    const double e = e_lo + (e_hi - e_lo) * i / n;
    const double fe = shoot(p, e);
    if (prev_f == 0.0) {
      roots.push_back(prev_e);
    } else if (prev_f * fe < 0.0) {
      double lo = prev_e, hi = e, flo = prev_f;
      for (int it = 0; it < 100 && hi - lo > 1e-13 * std::max(1.0, std::abs(lo)); ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = shoot(p, mid);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if (flo * fm < 0.0)
          hi = mid;
        else {
          lo = mid;
          flo = fm;
        }
      }
      roots.push_back(0.5 * (lo + hi));
      if (static_cast<int>(roots.size()) == count && count > 0) return roots;
    }
    prev_e = e;
    prev_f = fe;
  }
  return roots;
}

}  // namespace diracband::oracle
