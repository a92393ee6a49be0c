#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "diracband/branches.hpp"
#include "diracband/dispersion.hpp"
#include "diracband/specfun.hpp"

using namespace diracband;
using namespace diracband::branches;

namespace {

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

Branch synthetic(const std::vector<double>& mus, const std::vector<double>& es, int p = 1) {
  Branch b;
  b.id = "synthetic";
  b.p_sign = p;
  for (size_t i = 0; i < mus.size(); ++i)
    b.points.push_back({mus[i], es[i], StateClass::Edge, p, 0.0, b.id});
  return b;
}

}  // namespace

TEST_CASE("solve_root hits the mu=0 Bessel zero") {
  ProblemSpec spec(BoundaryKind::ApsMinus, AngularSector(7, 1, SpinorType::Phi), 1.0);
  dispersion::DispersionEquation eq{spec, dispersion::Regime::BulkPositiveE, 0.0};
  double z = specfun::bessel_zeros(specfun::HalfIntOrder::l_plus_three_halves(3), 1)[0];
  auto bp = solve_root(eq, z - 0.4, z + 0.4);
  CHECK(std::abs(bp.E - z) < 1e-10);
  CHECK(std::abs(bp.residual) <= 1e-12);
  CHECK(bp.state_class == StateClass::Bulk);
  CHECK(bp.p_sign == 1);

  CHECK_THROWS_AS(solve_root(eq, z + 0.5, z + 0.9), NoSignChangeError);
}

TEST_CASE("solve_root cross-checks the edge root") {
  ProblemSpec spec(BoundaryKind::ApsMinus, AngularSector(7, 1, SpinorType::Phi), 1.0);
  dispersion::DispersionEquation eq{spec, dispersion::Regime::Edge, 2.0};
  auto bp = solve_root(eq, -1.999, -1e-9);
  CHECK(bp.state_class == StateClass::Edge);
  CHECK(std::abs(bp.residual) <= 1e-12);
  auto roots = dispersion::edge_roots(spec, 2.0);
  CHECK(std::abs(bp.E - roots[0]) < 1e-10);
}

TEST_CASE("APS edge sweep: two branches through the zero mode") {
  SweepConfig cfg;
  cfg.bc = BoundaryKind::ApsMinus;
  cfg.l = 3;
  cfg.R = 1.0;
  cfg.mu_grid = linspace(-4.0, 4.0, 201);
  cfg.edge = true;
  auto branches = sweep(cfg);
  REQUIRE(branches.size() == 2);
  for (const auto& br : branches) {
    CHECK(br.points.size() == 201);
    CHECK_FALSE(br.jump_warning);
    // passes through (0, 0)
    bool has_zero = false;
    for (const auto& p : br.points)
      if (p.mu == 0.0) {
        CHECK(p.state_class == StateClass::ZeroMode);
        CHECK(p.E == 0.0);
        has_zero = true;
      }
    CHECK(has_zero);
    // quadrant table: Phi edge roots only in {mu>0, E<0} u {mu<0, E>0}
    for (const auto& p : br.points) {
      if (p.mu == 0.0) continue;
      if (br.p_sign > 0)
        CHECK(p.E * p.mu < 0.0);
      else
        CHECK(p.E * p.mu > 0.0);
    }
  }

  auto flow = spectral_flow(branches, FlowMode::Ordinary);
  CHECK(flow.flow == 0);
  REQUIRE(flow.contributions.size() == 2);
  for (const auto& c : flow.contributions) {
    CHECK(std::abs(c.crossing_mu) < 1e-12);
    if (c.p_sign > 0)
      CHECK(c.delta == -1);
    else
      CHECK(c.delta == +1);
  }
}

TEST_CASE("flow is independent of R") {
  for (double R : {0.5, 1.0, 2.0}) {
    SweepConfig cfg;
    cfg.l = 3;
    cfg.R = R;
    cfg.mu_grid = linspace(-4.0, 4.0, 201);
    auto flow = spectral_flow(sweep(cfg), FlowMode::Ordinary);
    CHECK(flow.flow == 0);
    CHECK(flow.contributions.size() == 2);
  }
}

TEST_CASE("branch continuity") {
  SweepConfig cfg;
  cfg.l = 3;
  cfg.R = 1.0;
  cfg.mu_grid = linspace(-4.0, 4.0, 201);
  auto branches = sweep(cfg);
  const double dmu = 8.0 / 200.0;
  for (const auto& br : branches)
    for (size_t i = 0; i + 1 < br.points.size(); ++i)
      CHECK(std::abs(br.points[i + 1].E - br.points[i].E) <= 10.0 * dmu);
}

TEST_CASE("chiral-bag transient branches and extended flow") {
  SweepConfig cfg;
  cfg.bc = BoundaryKind::ChiralBag;
  cfg.l = 3;
  cfg.R = 10.0;
  cfg.lambda = 0.1;
  cfg.mu_grid = linspace(-1.5, 1.5, 301);
  cfg.edge = true;
  cfg.n_bulk = 2;
  auto branches = sweep(cfg);

  auto flow = extended_flow_refined(cfg, branches);
  CHECK(flow.flow == 0);
  REQUIRE(flow.contributions.size() == 2);

  auto [em, ep] = dispersion::critical_eigenvalues_chiral(3, 10.0, 0.1);
  for (const auto& c : flow.contributions) {
    if (c.p_sign > 0) {
      CHECK(c.delta == -1);
      CHECK(c.line == "E=-mu");
      CHECK(std::abs(c.crossing_mu - (-em)) < 1e-6);
    } else {
      CHECK(c.delta == +1);
      CHECK(c.line == "E=+mu");
      CHECK(std::abs(c.crossing_mu - ep) < 1e-6);
    }
  }

  // bulk branches never cross E = 0
  for (const auto& br : branches)
    for (const auto& p : br.points)
      if (p.state_class == StateClass::Bulk) CHECK(std::abs(p.E) > std::abs(p.mu));

  // the transient branches must hold both edge and bulk segments
  int transients = 0;
  for (const auto& br : branches) {
    bool has_edge = false, has_bulk = false;
    for (const auto& p : br.points) {
      has_edge |= p.state_class == StateClass::Edge;
      has_bulk |= p.state_class == StateClass::Bulk;
    }
    if (has_edge && has_bulk) ++transients;
  }
  CHECK(transients == 2);
}

TEST_CASE("bulk gap scaling with R") {
  auto mean_gap = [](double R) {
    ProblemSpec spec(BoundaryKind::ApsMinus, AngularSector(7, 1, SpinorType::Phi), R);
    auto roots = dispersion::bulk_roots(spec, 0.1, 6, +1);
    REQUIRE(roots.size() == 6);
    return (roots.back() - roots.front()) / 5.0;
  };
  double g1 = mean_gap(1.0), g2 = mean_gap(2.0);
  CHECK(std::abs(g1 / g2 - 2.0) < 0.04);
}

TEST_CASE("synthetic flows") {
  auto up = synthetic({-1.0, -0.5, 0.5, 1.0}, {-0.8, -0.3, 0.4, 0.9});
  auto flow = spectral_flow({up}, FlowMode::Ordinary);
  CHECK(flow.flow == +1);
  REQUIRE(flow.contributions.size() == 1);
  CHECK(flow.contributions[0].delta == +1);

  auto touch = synthetic({-1.0, 0.0, 1.0}, {1.0, 0.0, 1.0});
  CHECK_THROWS_AS(spectral_flow({touch}, FlowMode::Ordinary), AmbiguousCrossingError);
}

TEST_CASE("sweep validates the grid") {
  SweepConfig cfg;
  cfg.mu_grid = {0.5};
  CHECK_THROWS_AS(sweep(cfg), std::invalid_argument);
}
