#include "diracband/radial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "diracband/quadrature.hpp"
#include "diracband/specfun.hpp"

namespace diracband::radial {

using specfun::HalfIntOrder;

namespace {

double sqrt_abs(double x) { return std::sqrt(std::abs(x)); }

RadialProfile make(Regime regime, const AngularSector& sector, double E, double mu,
                   std::function<std::pair<double, double>(double)> eval,
                   std::string tag) {
  RadialProfile p;
  p.regime = regime;
  p.sector = sector;
  p.E = E;
  p.mu = mu;
  p.eval = std::move(eval);
  p.normalization = std::move(tag);
  return p;
}

}  // namespace

RadialProfile edge_profile(const AngularSector& sector, double E, double mu) {
  if (!(std::abs(E) < std::abs(mu)) || mu == 0.0)
    throw std::domain_error("edge_profile: requires |E| < |mu|, mu != 0");
  const double eps = std::sqrt(mu * mu - E * E);
  if (eps < 1e-6 || std::abs(std::abs(E) - std::abs(mu)) < 1e-8) {
    RadialProfile p = reduced_edge_state(sector, E, mu);
    p.regime = Regime::Edge;
    return p;
  }
  const int l = sector.l();
  const HalfIntOrder n1 = HalfIntOrder::l_plus_half(l);
  const HalfIntOrder n2 = HalfIntOrder::l_plus_three_halves(l);
  // sign conventions split by sgn(mu); the Psi layout swaps the Bessel orders
  const double cf = (mu > 0) ? std::sqrt(mu + E) : -sqrt_abs(mu + E);
  const double cg = sqrt_abs(mu - E);
  const bool phi = sector.type == SpinorType::Phi;
  auto eval = [=](double r) {
    const double z = eps * r;
    const double pre = 1.0 / std::sqrt(z);
    const double i1 = specfun::bessel_I(n1, z);
    const double i2 = specfun::bessel_I(n2, z);
    double f = phi ? cf * pre * i1 : cf * pre * i2;
    double g = phi ? cg * pre * i2 : cg * pre * i1;
    return std::make_pair(f, g);
  };
  return make(Regime::Edge, sector, E, mu, eval, "prefactor");
}

RadialProfile bulk_profile(const AngularSector& sector, double E, double mu) {
  if (!(std::abs(E) > std::abs(mu)))
    throw std::domain_error("bulk_profile: requires |E| > |mu|");
  const double beta = std::sqrt(E * E - mu * mu);
  if (beta < 1e-6 || std::abs(std::abs(E) - std::abs(mu)) < 1e-8) {
    RadialProfile p = reduced_bulk_state(sector, E, mu);
    p.regime = Regime::Bulk;
    return p;
  }
  const int l = sector.l();
  const HalfIntOrder n1 = HalfIntOrder::l_plus_half(l);
  const HalfIntOrder n2 = HalfIntOrder::l_plus_three_halves(l);
  const bool phi = sector.type == SpinorType::Phi;
  double cf, cg;
  if (phi) {
    cf = (E > 0) ? -std::sqrt(E + mu) : sqrt_abs(E + mu);
    cg = sqrt_abs(E - mu);
  } else {
    cf = (E > 0) ? std::sqrt(E + mu) : -sqrt_abs(E + mu);
    cg = sqrt_abs(E - mu);
  }
  auto eval = [=](double r) {
    const double z = beta * r;
    const double pre = 1.0 / std::sqrt(z);
    const double j1 = specfun::bessel_J(n1, z);
    const double j2 = specfun::bessel_J(n2, z);
    double f = phi ? cf * pre * j1 : cf * pre * j2;
    double g = phi ? cg * pre * j2 : cg * pre * j1;
    return std::make_pair(f, g);
  };
  return make(Regime::Bulk, sector, E, mu, eval, "prefactor");
}

RadialProfile critical_profile(const AngularSector& sector, CriticalCase c, double mu) {
  const int l = sector.l();
  const double E = (c == CriticalCase::EEqualMinusMu) ? -mu : mu;
  const bool phi = sector.type == SpinorType::Phi;
  std::function<std::pair<double, double>(double)> eval;
  if (phi) {
    if (c == CriticalCase::EEqualMinusMu)
      eval = [=](double r) {
        return std::make_pair((2.0 * l + 3.0) * std::pow(r, l), 2.0 * mu * std::pow(r, l + 1));
      };
    else
      eval = [=](double r) { return std::make_pair(std::pow(r, l), 0.0); };
  } else {
    // Derived from the Psi radial system directly: for E = +mu the bounded
    // solution is (2 mu r^{l+1}, (2l+3) r^l); for E = -mu it is (0, r^l).
    if (c == CriticalCase::EEqualPlusMu)
      eval = [=](double r) {
        return std::make_pair(2.0 * mu * std::pow(r, l + 1), (2.0 * l + 3.0) * std::pow(r, l));
      };
    else
      eval = [=](double r) { return std::make_pair(0.0, std::pow(r, l)); };
  }
  return make(Regime::Critical, sector, E, mu, eval, "prefactor");
}

RadialProfile reduced_edge_state(const AngularSector& sector, double E, double mu) {
  if (!(std::abs(E) <= std::abs(mu)))
    throw std::domain_error("reduced_edge_state: requires |E| <= |mu|");
  const double eps = std::sqrt(std::max(0.0, mu * mu - E * E));
  const int l = sector.l();
  const HalfIntOrder n1 = HalfIntOrder::l_plus_half(l);
  const HalfIntOrder n2 = HalfIntOrder::l_plus_three_halves(l);
  const bool phi = sector.type == SpinorType::Phi;
  auto eval = [=](double r) {
    const double z = eps * r;
    const double a = std::pow(r, l) * specfun::bessel_IP(n1, z);
    const double b = std::pow(r, l + 1) * specfun::bessel_IP(n2, z);
    // uniform in sgn(mu): the mu<0 prefactors reduce to the same signed forms
    if (phi) return std::make_pair(a, 0.5 * (mu - E) * b);
    return std::make_pair(0.5 * (mu + E) * b, a);
  };
  return make(Regime::Edge, sector, E, mu, eval, "reduced");
}

RadialProfile reduced_bulk_state(const AngularSector& sector, double E, double mu) {
  if (!(std::abs(E) >= std::abs(mu)))
    throw std::domain_error("reduced_bulk_state: requires |E| >= |mu|");
  const double beta = std::sqrt(std::max(0.0, E * E - mu * mu));
  const int l = sector.l();
  const HalfIntOrder n1 = HalfIntOrder::l_plus_half(l);
  const HalfIntOrder n2 = HalfIntOrder::l_plus_three_halves(l);
  const bool phi = sector.type == SpinorType::Phi;
  auto eval = [=](double r) {
    const double z = beta * r;
    const double a = std::pow(r, l) * specfun::bessel_JP(n1, z);
    const double b = std::pow(r, l + 1) * specfun::bessel_JP(n2, z);
    if (phi) return std::make_pair(a, 0.5 * (mu - E) * b);
    return std::make_pair(0.5 * (mu + E) * b, a);
  };
  return make(Regime::Bulk, sector, E, mu, eval, "reduced");
}

std::vector<double> check_grid(double R) {
  std::vector<double> g(200);
  const double lo = std::log(R / 100.0), hi = std::log(R);
  for (int i = 0; i < 200; ++i) g[i] = std::exp(lo + (hi - lo) * i / 199.0);
  return g;
}

double ode_residual(const RadialProfile& p, const std::vector<double>& grid) {
  const int l = p.sector.l();
  const double E = p.E, mu = p.mu;
  const bool phi = p.sector.type == SpinorType::Phi;
  double scale = 0.0;
  for (double r : grid) {
    auto [f, g] = p.eval(r);
    scale = std::max({scale, std::abs(f), std::abs(g)});
  }
  if (scale == 0.0) return 0.0;
  const double wave = std::sqrt(std::abs(E * E - mu * mu));
  double worst = 0.0;
  for (double r : grid) {
    // 5-point stencil, step tied to the local smoothness scale
    const double h = 6e-4 * std::min(r, 1.0 / std::max(1.0, wave));
    auto [f2p, g2p] = p.eval(r + 2 * h);
    auto [f1p, g1p] = p.eval(r + h);
    auto [f1m, g1m] = p.eval(r - h);
    auto [f2m, g2m] = p.eval(r - 2 * h);
    auto [f, g] = p.eval(r);
    const double df = (-f2p + 8 * f1p - 8 * f1m + f2m) / (12.0 * h);
    const double dg = (-g2p + 8 * g1p - 8 * g1m + g2m) / (12.0 * h);
    double r1, r2;
    if (phi) {
      r1 = df - (l / r) * f - (E + mu) * g;
      r2 = dg + ((l + 2.0) / r) * g - (mu - E) * f;
    } else {
      r1 = df + ((l + 2.0) / r) * f - (E + mu) * g;
      r2 = dg - (l / r) * g - (mu - E) * f;
    }
    worst = std::max({worst, std::abs(r1), std::abs(r2)});
  }
  return worst / scale;
}

double l2_norm_ball(const RadialProfile& p, double R) {
  GaussLegendre q = gauss_legendre(128, 0.0, R);
  double acc = 0.0;
  for (int i = 0; i < 128; ++i) {
    auto [f, g] = p.eval(q.x[i]);
    acc += q.w[i] * (f * f + g * g) * q.x[i] * q.x[i];
  }
  return std::sqrt(acc);
}

double profile_distance(const RadialProfile& a, const RadialProfile& b,
                        const std::vector<double>& grid) {
  std::vector<double> av, bv;
  av.reserve(2 * grid.size());
  bv.reserve(2 * grid.size());
  for (double r : grid) {
    auto [fa, ga] = a.eval(r);
    auto [fb, gb] = b.eval(r);
    av.push_back(fa);
    av.push_back(ga);
    bv.push_back(fb);
    bv.push_back(gb);
  }
  // best scalar multiple of b in least squares, then sup distance in a's scale
  double num = 0.0, den = 0.0;
  for (size_t i = 0; i < av.size(); ++i) {
    num += av[i] * bv[i];
    den += bv[i] * bv[i];
  }
  if (den == 0.0) {
    double s = 0.0;
    for (double v : av) s = std::max(s, std::abs(v));
    return s;
  }
  const double c = num / den;
  double d = 0.0;
  for (size_t i = 0; i < av.size(); ++i) d = std::max(d, std::abs(av[i] - c * bv[i]));
  return d;
}

}  // namespace diracband::radial
