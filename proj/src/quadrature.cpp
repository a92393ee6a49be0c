#include "diracband/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace diracband {

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  GaussLegendre q;
  q.x.resize(n);
  q.w.resize(n);
  const double pi = 3.14159265358979323846;
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-based initial guess, refined by Newton on P_n.
    double z = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 0; k < n; ++k) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0) * z * p1 - k * p2) / (k + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    q.x[i] = -z;
    q.x[n - 1 - i] = z;
    double w = 2.0 / ((1.0 - z * z) * pp * pp);
    q.w[i] = w;
    q.w[n - 1 - i] = w;
  }
  return q;
}

GaussLegendre gauss_legendre(int n, double a, double b) {
  GaussLegendre q = gauss_legendre(n);
  const double mid = 0.5 * (a + b), hw = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    q.x[i] = mid + hw * q.x[i];
    q.w[i] *= hw;
  }
  return q;
}

}  // namespace diracband
