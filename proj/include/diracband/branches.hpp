#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "diracband/dispersion.hpp"
#include "diracband/types.hpp"

namespace diracband::branches {

enum class StateClass { Edge, Bulk, ZeroMode, Critical };

struct BranchPoint {
  double mu = 0.0;
  double E = 0.0;
  StateClass state_class = StateClass::Edge;
  int p_sign = +1;
  double residual = 0.0;
  std::string branch_id;
};

struct Branch {
  std::string id;
  int p_sign = +1;
  std::vector<BranchPoint> points;
  bool jump_warning = false;
};

struct NoSignChangeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SolverIterationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AmbiguousCrossingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Root of the dispersion residual on a sign-change bracket: bisection to a
// 1e-6 bracket, then Newton with a numerical derivative; |residual| <= 1e-12
// at the returned point.  Throws NoSignChangeError / SolverIterationError.
BranchPoint solve_root(const dispersion::DispersionEquation& eq, double e_lo, double e_hi);

struct SweepConfig {
  BoundaryKind bc = BoundaryKind::ApsMinus;
  int l = 3;
  double R = 1.0;
  double lambda = 0.0;
  std::vector<double> mu_grid;
  bool edge = true;
  int n_bulk = 0;  // bulk roots tracked per energy sign and spinor type
  int threads = 1;
};

// Continued branches over the mu grid for both spinor types.  Roots are
// matched step to step by a linear predictor; edge and bulk segments of a
// chiral-bag transient branch are stitched across the |E| = |mu| lines.
std::vector<Branch> sweep(const SweepConfig& cfg);

enum class FlowMode { Ordinary, Extended };

struct FlowContribution {
  std::string branch_id;
  int p_sign = 0;
  double crossing_mu = 0.0;
  int delta = 0;
  std::string line;  // "E=0", "E=+mu", "E=-mu"
};

struct FlowReport {
  FlowMode mode = FlowMode::Ordinary;
  int flow = 0;
  std::vector<FlowContribution> contributions;
};

// Signed crossing count from sampled branches.  Ordinary counts E = 0
// crossings (+1 upward); extended counts E = -+mu crossings (-1 at E = -mu,
// +1 at E = +mu for the canonical bulk-to-edge direction).  A branch touching
// a line without crossing raises AmbiguousCrossingError.
FlowReport spectral_flow(const std::vector<Branch>& branches, FlowMode mode);

// Extended flow with each crossing_mu re-located by bisection of the
// line-restricted dispersion residual (series form), accurate to ~1e-9.
FlowReport extended_flow_refined(const SweepConfig& cfg, const std::vector<Branch>& branches);

}  // namespace diracband::branches
