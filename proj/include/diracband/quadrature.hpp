#pragma once

#include <vector>

namespace diracband {

struct GaussLegendre {
  std::vector<double> x;
  std::vector<double> w;
};

// Nodes and weights on [-1, 1].
GaussLegendre gauss_legendre(int n);

// Nodes and weights mapped to [a, b].
GaussLegendre gauss_legendre(int n, double a, double b);

}  // namespace diracband
