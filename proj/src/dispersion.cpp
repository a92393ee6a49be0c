#include "diracband/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "diracband/specfun.hpp"

namespace diracband::dispersion {

using specfun::HalfIntOrder;

namespace {

// Ratio IP_{l+1/2}(z) / IP_{l+3/2}(z); positive, increasing, value l+3/2 at 0.
// Beyond the exponent range of the raw series the ratio is formed from the
// scaled modified Bessel values instead.
double ip_ratio(int l, double z) {
  if (z > 600.0) {
    return 0.5 * z * specfun::bessel_I_scaled(HalfIntOrder::l_plus_half(l), z) /
           specfun::bessel_I_scaled(HalfIntOrder::l_plus_three_halves(l), z);
  }
  return specfun::bessel_IP(HalfIntOrder::l_plus_half(l), z) /
         specfun::bessel_IP(HalfIntOrder::l_plus_three_halves(l), z);
}

// C R = (l+1) + sqrt((l+1)^2 + (mu R)^2)
double aps_cr(int l, double mu, double R) {
  const double lp = l + 1.0;
  return lp + std::sqrt(lp * lp + mu * mu * R * R);
}

constexpr double kSeriesSwitch = 0.5;  // beta R below this uses the JP forms

}  // namespace

std::optional<double> edge_residual(const ProblemSpec& spec, double E, double mu) {
  if (mu == 0.0) throw std::domain_error("edge_residual: mu must be nonzero");
  if (!(std::abs(E) <= std::abs(mu)))
    throw std::domain_error("edge_residual: requires |E| <= |mu|");
  const int l = spec.sector.l();
  const bool phi = spec.sector.type == SpinorType::Phi;
  const double R = spec.R;
  const double eps = std::sqrt(std::max(0.0, mu * mu - E * E));
  const double S = ip_ratio(l, eps * R);

  switch (spec.bc) {
    case BoundaryKind::ApsMinus: {
      const double cr = aps_cr(l, mu, R);
      if (mu > 0.0) {
        if (phi) {
          if (E > 0.0) return std::nullopt;  // no sol.
          return 2.0 * mu * S - cr * (mu - E);
        }
        if (E < 0.0) return std::nullopt;
        return 2.0 * mu * S - cr * (mu + E);
      }
      const double am = -mu;  // |mu|
      if (phi) {
        if (E < 0.0) return std::nullopt;
        return 2.0 * am * S - cr * (am + E);
      }
      if (E > 0.0) return std::nullopt;
      return 2.0 * am * S - cr * (am - E);
    }
    case BoundaryKind::ApsPlus:
      // the (+) eigenspace condition admits no edge states for either layout
      return std::nullopt;
    case BoundaryKind::ChiralBag: {
      if (mu < 0.0) return std::nullopt;  // no sol. for mu < 0
      const double el = std::exp(-spec.chiral_lambda);
      if (phi) return 2.0 * S - el * R * (mu - E);
      return R * (mu + E) - 2.0 * el * S;
    }
  }
  return std::nullopt;
}

std::optional<double> bulk_residual(const ProblemSpec& spec, double E, double mu) {
  if (!(std::abs(E) >= std::abs(mu)))
    throw std::domain_error("bulk_residual: requires |E| >= |mu|");
  const int l = spec.sector.l();
  const bool phi = spec.sector.type == SpinorType::Phi;
  const double R = spec.R;
  const double beta = std::sqrt(std::max(0.0, E * E - mu * mu));
  const double z = beta * R;
  const HalfIntOrder n1 = HalfIntOrder::l_plus_half(l);
  const HalfIntOrder n2 = HalfIntOrder::l_plus_three_halves(l);

  const bool series = z < kSeriesSwitch;
  const double b1 = series ? specfun::bessel_JP(n1, z) : specfun::bessel_J(n1, z);
  const double b2 = series ? specfun::bessel_JP(n2, z) : specfun::bessel_J(n2, z);

  const double sp = std::sqrt(std::abs(E + mu));
  const double sm = std::sqrt(std::abs(E - mu));
  const double ap = std::abs(E + mu);
  const double am = std::abs(E - mu);

  switch (spec.bc) {
    case BoundaryKind::ApsMinus: {
      const double c = aps_cr(l, mu, R) / R;
      if (phi) {
        if (E > 0.0)
          return series ? -mu * b1 - c * R * (E - mu) * 0.5 * b2
                        : -mu * sp * b1 - c * sm * b2;
        return series ? mu * b1 - c * R * am * 0.5 * b2 : mu * sp * b1 - c * sm * b2;
      }
      if (E > 0.0)
        return series ? mu * b1 - c * R * (E + mu) * 0.5 * b2 : mu * sm * b1 - c * sp * b2;
      return series ? -mu * b1 - c * R * ap * 0.5 * b2 : -mu * sm * b1 - c * sp * b2;
    }
    case BoundaryKind::ApsPlus: {
      const double c = aps_cr(l, mu, R) / R;
      if (phi) {
        if (E > 0.0)
          return series ? mu * R * (E - mu) * 0.5 * b2 - c * b1 : mu * sm * b2 - c * sp * b1;
        return series ? -mu * R * am * 0.5 * b2 - c * b1 : -mu * sm * b2 - c * sp * b1;
      }
      if (E > 0.0)
        return series ? -mu * R * (E + mu) * 0.5 * b2 - c * b1 : -mu * sp * b2 - c * sm * b1;
      return series ? mu * R * ap * 0.5 * b2 - c * b1 : mu * sp * b2 - c * sm * b1;
    }
    case BoundaryKind::ChiralBag: {
      const double el = std::exp(-spec.chiral_lambda);
      if (phi) {
        if (E > 0.0)
          return series ? -b1 - el * R * (E - mu) * 0.5 * b2 : -sp * b1 - el * sm * b2;
        return series ? b1 - el * R * am * 0.5 * b2 : sp * b1 - el * sm * b2;
      }
      if (E > 0.0)
        return series ? R * (E + mu) * 0.5 * b2 - el * b1 : sp * b2 - el * sm * b1;
      return series ? -R * ap * 0.5 * b2 - el * b1 : -sp * b2 - el * sm * b1;
    }
  }
  return std::nullopt;
}

std::optional<double> edge_residual_aps(const ProblemSpec& spec, double E, double mu) {
  if (spec.bc == BoundaryKind::ChiralBag)
    throw std::invalid_argument("edge_residual_aps: spec is chiral-bag");
  return edge_residual(spec, E, mu);
}

std::optional<double> bulk_residual_aps(const ProblemSpec& spec, double E, double mu) {
  if (spec.bc == BoundaryKind::ChiralBag)
    throw std::invalid_argument("bulk_residual_aps: spec is chiral-bag");
  return bulk_residual(spec, E, mu);
}

std::optional<double> edge_residual_chiral(const ProblemSpec& spec, double E, double mu) {
  if (spec.bc != BoundaryKind::ChiralBag)
    throw std::invalid_argument("edge_residual_chiral: spec is not chiral-bag");
  return edge_residual(spec, E, mu);
}

std::optional<double> bulk_residual_chiral(const ProblemSpec& spec, double E, double mu) {
  if (spec.bc != BoundaryKind::ChiralBag)
    throw std::invalid_argument("bulk_residual_chiral: spec is not chiral-bag");
  return bulk_residual(spec, E, mu);
}

std::pair<double, double> critical_eigenvalues_chiral(int l, double R, double lambda) {
  if (!(R > 0.0)) throw std::invalid_argument("critical_eigenvalues_chiral: R > 0");
  const double em = -(2.0 * l + 3.0) * std::exp(lambda) / (2.0 * R);
  const double ep = (2.0 * l + 3.0) * std::exp(-lambda) / (2.0 * R);
  return {em, ep};
}

std::optional<double> DispersionEquation::residual(double E) const {
  if (regime == Regime::Edge) return edge_residual(spec, E, mu);
  return bulk_residual(spec, E, mu);
}

bool DispersionEquation::valid(double E) const {
  if (regime == Regime::Edge) {
    if (!(std::abs(E) <= std::abs(mu)) || mu == 0.0) return false;
    return edge_residual(spec, E, mu).has_value();
  }
  if (!(std::abs(E) >= std::abs(mu))) return false;
  if (regime == Regime::BulkPositiveE) return E > 0.0;
  return E < 0.0;
}

namespace {

// Bisection + Newton polish of a scalar function on a sign-change bracket.
template <typename F>
double refine_root(F&& f, double lo, double hi) {
  double flo = f(lo);
  if (flo == 0.0) return lo;
  if (f(hi) == 0.0) return hi;
  while (hi - lo > 1e-6 * std::max(1.0, std::abs(lo))) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (fm == 0.0) return mid;
    if (flo * fm < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  // Newton may step a little past the narrowed bracket (roots can sit at a
  // scan mark); a failed run falls back to machine-width bisection.
  const double width = hi - lo;
  double x = 0.5 * (lo + hi);
  const double h = 1e-7 * std::max(1.0, std::abs(x));
  for (int it = 0; it < 16; ++it) {
    double fx = f(x);
    if (std::abs(fx) < 1e-13) return x;
    double d = (f(x + h) - f(x - h)) / (2.0 * h);
    if (d == 0.0) break;
    double xn = x - fx / d;
    if (xn < lo - 2.0 * width || xn > hi + 2.0 * width) break;
    if (std::abs(xn - x) < 4e-16 * std::max(1.0, std::abs(x))) return xn;
    x = xn;
  }
  while (hi - lo > 8e-16 * std::max(1.0, std::abs(lo))) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (fm == 0.0) return mid;
    if (flo * fm < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> edge_roots(const ProblemSpec& spec, double mu, int scan_samples) {
  std::vector<double> roots;
  if (mu == 0.0) return roots;
  const double am = std::abs(mu);
  auto res = [&](double E) -> std::optional<double> { return edge_residual(spec, E, mu); };

  // scan the closed interval; quadrants without solutions return nullopt
  double prev_e = 0.0;
  std::optional<double> prev;
  bool have_prev = false;
  for (int i = 0; i <= scan_samples; ++i) {
    const double E = std::clamp(-am + 2.0 * am * i / scan_samples, -am, am);
    auto v = res(E);
    if (have_prev && prev.has_value() && v.has_value()) {
      if (*prev == 0.0) {
        roots.push_back(prev_e);
      } else if (*prev * *v < 0.0) {
        roots.push_back(refine_root([&](double x) { return *res(x); }, prev_e, E));
      }
    }
    prev_e = E;
    prev = v;
    have_prev = true;
  }
  return roots;
}

std::vector<double> bulk_roots(const ProblemSpec& spec, double mu, int count, int esign) {
  std::vector<double> roots;
  if (count < 1) return roots;
  const int l = spec.sector.l();
  const double R = spec.R;

  auto energy = [&](double t) { return esign * std::sqrt(t * t / (R * R) + mu * mu); };
  auto rt = [&](double t) { return *bulk_residual(spec, energy(t), mu); };

  // candidate intervals from the merged zeros of the two Bessel orders
  const int nz = count + l + 6;
  auto z1 = specfun::bessel_zeros(HalfIntOrder::l_plus_half(l), nz);
  auto z2 = specfun::bessel_zeros(HalfIntOrder::l_plus_three_halves(l), nz);
  std::vector<double> marks;
  marks.push_back(0.0);
  marks.insert(marks.end(), z1.begin(), z1.end());
  marks.insert(marks.end(), z2.begin(), z2.end());
  std::sort(marks.begin(), marks.end());

  double prev_t = 1e-12;
  double prev_f = rt(prev_t);
  for (size_t mi = 0; mi + 1 < marks.size() && (int)roots.size() < count; ++mi) {
    const double a = marks[mi], b = marks[mi + 1];
    const int sub = 8;
    for (int s = 1; s <= sub && (int)roots.size() < count; ++s) {
      const double t = a + (b - a) * s / sub;
      if (t <= prev_t) continue;
      const double f = rt(t);
      if (prev_f == 0.0) {
        roots.push_back(energy(prev_t));
      } else if (prev_f * f < 0.0) {
        double troot = refine_root(rt, prev_t, t);
        roots.push_back(energy(troot));
      }
      prev_t = t;
      prev_f = f;
    }
  }
  return roots;
}

}  // namespace diracband::dispersion
