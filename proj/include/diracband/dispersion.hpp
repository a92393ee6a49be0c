#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "diracband/types.hpp"

namespace diracband::dispersion {

enum class Regime { Edge, BulkPositiveE, BulkNegativeE };

// Residual of the edge eigenvalue equation at (E, mu), |E| <= |mu|, written in
// the regularized-series form so it stays finite up to the |E| = |mu| lines.
// Returns nullopt for the structurally solution-free quadrants.  Throws
// std::domain_error outside the edge regime or for mu = 0.
std::optional<double> edge_residual(const ProblemSpec& spec, double E, double mu);

// Residual of the bulk eigenvalue equation at (E, mu), |E| >= |mu|.  Uses the
// regularized-series form near |E| = |mu| and the plain Bessel form elsewhere
// (the two differ by a positive factor, so signs and roots agree).
std::optional<double> bulk_residual(const ProblemSpec& spec, double E, double mu);

// Named per the sources they implement; thin dispatchers over the two above.
std::optional<double> edge_residual_aps(const ProblemSpec& spec, double E, double mu);
std::optional<double> bulk_residual_aps(const ProblemSpec& spec, double E, double mu);
std::optional<double> edge_residual_chiral(const ProblemSpec& spec, double E, double mu);
std::optional<double> bulk_residual_chiral(const ProblemSpec& spec, double E, double mu);

// Closed-form chiral-bag critical eigenvalues:
// E- = -(2l+3) e^{lambda} / (2R), E+ = +(2l+3) e^{-lambda} / (2R).
std::pair<double, double> critical_eigenvalues_chiral(int l, double R, double lambda);

/// One eigenvalue equation with its validity predicate.
struct DispersionEquation {
  ProblemSpec spec;
  Regime regime = Regime::Edge;
  double mu = 0.0;

  // residual as a function of E alone
  std::optional<double> residual(double E) const;
  bool valid(double E) const;
};

// All edge roots in (-|mu|, |mu|), found by sign scan plus refinement.
std::vector<double> edge_roots(const ProblemSpec& spec, double mu, int scan_samples = 400);

// First `count` bulk roots on the esign = +-1 branch, ordered by |E|.
std::vector<double> bulk_roots(const ProblemSpec& spec, double mu, int count, int esign);

}  // namespace diracband::dispersion
