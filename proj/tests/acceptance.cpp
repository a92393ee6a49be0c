// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "diracband/angular.hpp"
#include "diracband/boundary.hpp"
#include "diracband/branches.hpp"
#include "diracband/dispersion.hpp"
#include "diracband/oracle.hpp"
#include "diracband/radial.hpp"
#include "diracband/semiq.hpp"
#include "diracband/specfun.hpp"
#include "diracband/symmetry.hpp"

using namespace diracband;

namespace {

int g_failures = 0;

void report(int idx, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] %d %s%s%s\n", ok ? "PASS" : "FAIL", idx, name,
              detail.empty() ? "" : ": ", detail.c_str());
  if (!ok) ++g_failures;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

double now_seconds() {
  using clock = std::chrono::steady_clock;
  static const auto t0 = clock::now();
  return std::chrono::duration<double>(clock::now() - t0).count();
}

// ---------------------------------------------------------------- criterion 1
void criterion_aps_flow() {
  bool ok = true;
  std::string detail;
  double elapsed_r1 = 0.0;
  for (double R : {1.0, 0.5, 2.0}) {
    branches::SweepConfig cfg;
    cfg.bc = BoundaryKind::ApsMinus;
    cfg.l = 3;
    cfg.R = R;
    cfg.mu_grid = linspace(-4.0, 4.0, 201);
    cfg.edge = true;
    cfg.threads = 1;
    double t0 = now_seconds();
    auto brs = branches::sweep(cfg);
    auto flow = branches::spectral_flow(brs, branches::FlowMode::Ordinary);
    double dt = now_seconds() - t0;
    if (R == 1.0) elapsed_r1 = dt;
    ok &= brs.size() == 2;
    ok &= flow.flow == 0 && flow.contributions.size() == 2;
    for (const auto& c : flow.contributions)
      ok &= (c.p_sign < 0 && c.delta == +1) || (c.p_sign > 0 && c.delta == -1);
  }
  ok &= elapsed_r1 < 10.0;
  detail = "two branches, contributions (+1 | P<0), (-1 | P>0), net 0 at R in {0.5,1,2}; "
           "R=1 sweep took " + std::to_string(elapsed_r1) + " s";
  report(1, "APS spectral flow", ok, detail);
}

// ---------------------------------------------------------------- criterion 2
void criterion_chiral_crossings() {
  const int l = 3;
  const double R = 10.0, lambda = 0.1;
  branches::SweepConfig cfg;
  cfg.bc = BoundaryKind::ChiralBag;
  cfg.l = l;
  cfg.R = R;
  cfg.lambda = lambda;
  cfg.mu_grid = linspace(-1.5, 1.5, 301);
  cfg.edge = true;
  cfg.n_bulk = 2;
  cfg.threads = 1;
  auto brs = branches::sweep(cfg);
  auto flow = branches::extended_flow_refined(cfg, brs);

  const double e_plus = 9.0 * std::exp(-0.1) / 20.0;
  const double e_minus = -9.0 * std::exp(0.1) / 20.0;
  bool ok = flow.flow == 0 && flow.contributions.size() == 2;
  double wp = -1.0, wm = -1.0;
  for (const auto& c : flow.contributions) {
    if (c.line == "E=+mu") {
      wp = std::abs(c.crossing_mu - e_plus);  // E = mu at the crossing
      ok &= c.delta == +1 && c.p_sign < 0 && wp <= 1e-6;
    } else if (c.line == "E=-mu") {
      wm = std::abs(-c.crossing_mu - e_minus);  // E = -mu at the crossing
      ok &= c.delta == -1 && c.p_sign > 0 && wm <= 1e-6;
    }
  }
  ok &= wp >= 0.0 && wm >= 0.0;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "E+ off by %.2e, E- off by %.2e, extended flow 0", wp, wm);
  report(2, "chiral-bag critical crossings", ok, buf);
}

// ---------------------------------------------------------------- criterion 3
void criterion_degrees() {
  const double pi = 3.14159265358979323846;
  bool ok = true;
  for (double mu : {1.0, -1.0}) {
    ok &= semiq::degree_analytic(+1, mu).value == 0.5 * (mu > 0 ? 1 : -1);
    ok &= semiq::degree_analytic(-1, mu).value == -0.5 * (mu > 0 ? 1 : -1);
  }
  auto quad = semiq::degree_quadrature(+1, 1.0);
  ok &= std::abs(quad.value - 0.5) <= 1e-4;
  semiq::QuadratureParams trunc;
  trunc.tan_substitution = false;
  trunc.k_max = 200.0;
  auto raw = semiq::degree_quadrature(+1, 1.0, trunc);
  ok &= std::abs(raw.raw_integral - pi * pi) <= 1e-3;

  double t0 = now_seconds();
  auto trace = semiq::degree_trace_form(1.0);
  double dt = now_seconds() - t0;
  ok &= std::abs(trace.value - 0.5) <= 1e-2;
  ok &= dt < 30.0;

  double jp = semiq::degree_quadrature(+1, 1.0).value -
              semiq::degree_quadrature(+1, -1.0).value;
  double jm = semiq::degree_quadrature(-1, 1.0).value -
              semiq::degree_quadrature(-1, -1.0).value;
  ok &= std::abs(jp - 1.0) <= 1e-4 && std::abs(jm + 1.0) <= 1e-4;
  ok &= std::abs(jp + jm) <= 2e-4;

  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "quad %.2e off, raw integral %.2e off pi^2, trace %.2e off (%.1f s), "
                "jumps (+1,-1) net %.1e",
                std::abs(quad.value - 0.5), std::abs(raw.raw_integral - pi * pi),
                std::abs(trace.value - 0.5), dt, jp + jm);
  report(3, "mapping degrees", ok, buf);
}

// ------------------------------------------------------- criteria 4 and 8
struct EigenState {
  ProblemSpec spec;
  double mu, E;
  bool edge;
};

std::vector<EigenState> g_states;  // filled by criterion 4, reused by 8

void criterion_oracle_equivalence() {
  bool ok = true;
  double worst = 0.0;
  int states = 0;
  for (int two_j : {1, 7}) {
    for (double mu : {-2.0, -0.5, 0.5, 2.0}) {
      for (auto bc : {BoundaryKind::ApsMinus, BoundaryKind::ChiralBag}) {
        for (auto type : {SpinorType::Phi, SpinorType::Psi}) {
          ProblemSpec spec(bc, AngularSector(two_j, 1, type), 1.0,
                           bc == BoundaryKind::ChiralBag ? 0.1 : 0.0);
          auto edge_d = dispersion::edge_roots(spec, mu);
          auto neg = dispersion::bulk_roots(spec, mu, 4, -1);
          auto pos = dispersion::bulk_roots(spec, mu, 4, +1);
          // window that isolates the edge roots and the 3 bulk roots per sign
          double lo = 0.5 * (neg[2] + neg[3]);
          double hi = 0.5 * (pos[2] + pos[3]);
          std::vector<double> expected(edge_d);
          expected.insert(expected.end(), neg.begin(), neg.begin() + 3);
          expected.insert(expected.end(), pos.begin(), pos.begin() + 3);

          oracle::ShootingProblem prob{spec, mu};
          auto got = oracle::oracle_eigenvalues(prob, 0, lo, hi);
          double d = symmetry::root_set_distance(expected, got);
          double scale = std::max(1.0, std::abs(hi));
          ok &= std::isfinite(d) && d <= 1e-6 * scale;
          worst = std::max(worst, d / scale);
          states += static_cast<int>(expected.size());

          for (double e : edge_d) g_states.push_back({spec, mu, e, true});
          g_states.push_back({spec, mu, neg[0], false});
          g_states.push_back({spec, mu, pos[0], false});
        }
      }
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%d eigenvalues cross-checked, worst rel diff %.2e",
                states, worst);
  report(4, "oracle equivalence", ok, buf);
}

// ---------------------------------------------------------------- criterion 5
void criterion_zero_mode_transients() {
  const int l = 3;
  auto grid = radial::check_grid(1.0);
  const double gam = specfun::gamma_half(2 * l + 3);
  bool ok = true;
  double worst_aps = 0.0;

  // APS side: reduced edge states against the mu = 0 zero modes
  for (double mu : {1e-4, -1e-4}) {
    auto red_phi =
        radial::reduced_edge_state(AngularSector(2 * l + 1, 1, SpinorType::Phi), 0.0, mu);
    auto red_psi =
        radial::reduced_edge_state(AngularSector(2 * l + 1, 1, SpinorType::Psi), 0.0, mu);
    for (double r : grid) {
      auto [f, g] = red_phi(r);
      worst_aps = std::max(worst_aps, std::abs(f - std::pow(r, l) / gam));
      worst_aps = std::max(worst_aps, std::abs(g));
      auto [fp, gp] = red_psi(r);
      worst_aps = std::max(worst_aps, std::abs(gp - std::pow(r, l) / gam));
      worst_aps = std::max(worst_aps, std::abs(fp));
    }
  }
  ok &= worst_aps <= 1e-6;

  // chiral side: reduced edge and bulk states against the critical profiles
  const double R = 1.0, lambda = 0.1;
  auto [em, ep] = dispersion::critical_eigenvalues_chiral(l, R, lambda);
  AngularSector phi_s(2 * l + 1, 1, SpinorType::Phi);
  AngularSector psi_s(2 * l + 1, 1, SpinorType::Psi);
  const double mu_m = -em;
  auto crit_phi = radial::critical_profile(phi_s, radial::CriticalCase::EEqualMinusMu, mu_m);
  double worst_chiral = std::max(
      radial::profile_distance(crit_phi,
                               radial::reduced_edge_state(phi_s, -mu_m + 1e-6, mu_m), grid),
      radial::profile_distance(crit_phi,
                               radial::reduced_bulk_state(phi_s, -mu_m - 1e-6, mu_m), grid));
  auto crit_psi = radial::critical_profile(psi_s, radial::CriticalCase::EEqualPlusMu, ep);
  worst_chiral = std::max(
      worst_chiral,
      radial::profile_distance(crit_psi, radial::reduced_edge_state(psi_s, ep - 1e-6, ep),
                               grid));
  worst_chiral = std::max(
      worst_chiral,
      radial::profile_distance(crit_psi, radial::reduced_bulk_state(psi_s, ep + 1e-6, ep),
                               grid));
  ok &= worst_chiral <= 1e-5;

  char buf[160];
  std::snprintf(buf, sizeof(buf), "zero-mode sup %.2e (<=1e-6), critical sup %.2e (<=1e-5)",
                worst_aps, worst_chiral);
  report(5, "zero-mode transients", ok, buf);
}

// ---------------------------------------------------------------- criterion 6
void criterion_gap_scaling() {
  auto mean_gap = [](double R) {
    ProblemSpec spec(BoundaryKind::ApsMinus, AngularSector(7, 1, SpinorType::Phi), R);
    auto roots = dispersion::bulk_roots(spec, 0.1, 6, +1);
    return (roots.back() - roots.front()) / 5.0;
  };
  double g1 = mean_gap(1.0), g2 = mean_gap(2.0);
  double ratio = g1 / g2;
  bool ok = std::abs(ratio - 2.0) <= 0.04;  // 2 within 2%
  char buf[120];
  std::snprintf(buf, sizeof(buf), "gap(R=1)/gap(R=2) = %.5f", ratio);
  report(6, "bulk gap scaling", ok, buf);
}

// ---------------------------------------------------------------- criterion 7
void criterion_symmetry_suite() {
  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  double worst_mat = 0.0;
  for (int i = 0; i < 1000; ++i) {
    for (const auto& c :
         symmetry::check_k_symmetries(semiq::Vec3(u(rng), u(rng), u(rng)), u(rng)))
      worst_mat = std::max(worst_mat, c.residual);
    int l = i % 6;
    for (const auto& c : symmetry::check_boundary_symmetries(
             AngularSector(2 * l + 1, 1, SpinorType::Phi), u(rng), 0.5 + std::abs(u(rng))))
      worst_mat = std::max(worst_mat, c.residual);
  }

  std::vector<symmetry::SpectrumPair> pairs;
  for (double mu : {-2.0, -0.5, 0.5, 2.0}) {
    symmetry::SpectrumPair p;
    p.mu = mu;
    p.phi = symmetry::all_roots(
        ProblemSpec(BoundaryKind::ApsMinus, AngularSector(7, 1, SpinorType::Phi), 1.0), mu, 4);
    p.psi = symmetry::all_roots(
        ProblemSpec(BoundaryKind::ApsMinus, AngularSector(7, 1, SpinorType::Psi), 1.0), mu, 4);
    pairs.push_back(std::move(p));
  }
  auto mirror = symmetry::check_spectrum_mirror_aps(pairs);
  auto refl = symmetry::check_chiral_lambda_reflection(3, 1.0, 0.1, {-0.6, 0.8, 2.0}, 3);
  double asym = symmetry::chiral_self_asymmetry(3, 1.0, 0.1, 0.8, 3);

  bool ok = worst_mat <= 1e-13 && mirror.passed && refl.passed && asym > 1e-3;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "matrices %.1e (<=1e-13), mirror %.1e, lambda-reflection %.1e, "
                "asymmetry %.2f (must be > 0)",
                worst_mat, mirror.residual, refl.residual, asym);
  report(7, "symmetry suite", ok, buf);
}

// ---------------------------------------------------------------- criterion 8
void criterion_boundary_currents() {
  bool ok = true;
  double worst = 0.0;
  int counted = 0;
  for (const auto& st : g_states) {
    radial::RadialProfile prof =
        st.edge ? radial::edge_profile(st.spec.sector, st.E, st.mu)
                : radial::bulk_profile(st.spec.sector, st.E, st.mu);
    double c = std::abs(boundary::boundary_current(prof, st.spec.R));
    worst = std::max(worst, c);
    ++counted;
  }
  ok = counted > 0 && worst <= 1e-12;
  char buf[120];
  std::snprintf(buf, sizeof(buf), "%d eigenstates, worst |current| %.2e", counted, worst);
  report(8, "boundary currents", ok, buf);
}

// ---------------------------------------------------------------- criterion 9
void criterion_bessel_kernel() {
  using specfun::HalfIntOrder;
  const double pi = 3.14159265358979323846;
  bool ok = true;

  double worst_rec = 0.0;
  for (double x : {0.3, 1.7, 5.0, 20.0, 120.0}) {
    for (int t = 3; t <= 21; t += 2) {
      auto nu = [&](int tt) { return HalfIntOrder::from_twice(tt); };
      double j = std::abs(specfun::bessel_J(nu(t - 2), x) + specfun::bessel_J(nu(t + 2), x) -
                          (t / x) * specfun::bessel_J(nu(t), x));
      worst_rec = std::max(worst_rec, j / std::max(1.0, std::abs(specfun::bessel_J(nu(t), x))));
      double iv = std::abs(specfun::bessel_I_scaled(nu(t - 2), x) -
                           specfun::bessel_I_scaled(nu(t + 2), x) -
                           (t / x) * specfun::bessel_I_scaled(nu(t), x));
      worst_rec =
          std::max(worst_rec, iv / std::max(1.0, specfun::bessel_I_scaled(nu(t), x)));
    }
  }
  ok &= worst_rec <= 1e-11;

  bool interlace = true;
  for (int t = 1; t <= 19; t += 2) {
    auto za = specfun::bessel_zeros(HalfIntOrder::from_twice(t), 20);
    auto zb = specfun::bessel_zeros(HalfIntOrder::from_twice(t + 2), 20);
    for (int i = 0; i + 1 < 20; ++i)
      interlace &= za[i] < zb[i] && zb[i] < za[i + 1];
  }
  ok &= interlace;

  double worst_cf = 0.0;
  for (double x : {0.2, 1.0, pi, 10.0, 333.0}) {
    double ref = std::sqrt(2.0 / (pi * x)) * std::sin(x);
    worst_cf = std::max(worst_cf,
                        std::abs(specfun::bessel_J(HalfIntOrder::from_twice(1), x) - ref));
  }
  ok &= worst_cf <= 1e-13;

  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "recurrence %.1e (<=1e-11), interlacing nu<=21/2 %s, nu=1/2 closed form %.1e",
                worst_rec, interlace ? "ok" : "BROKEN", worst_cf);
  report(9, "Bessel kernel", ok, buf);
}

}  // namespace

int main() {
  criterion_aps_flow();
  criterion_chiral_crossings();
  criterion_degrees();
  criterion_oracle_equivalence();
  criterion_zero_mode_transients();
  criterion_gap_scaling();
  criterion_symmetry_suite();
  criterion_boundary_currents();
  criterion_bessel_kernel();
  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
