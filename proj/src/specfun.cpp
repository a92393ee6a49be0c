#include "diracband/specfun.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace diracband::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;

double j_half(double x) { return std::sqrt(2.0 / (kPi * x)) * std::sin(x); }
double j_minus_half(double x) { return std::sqrt(2.0 / (kPi * x)) * std::cos(x); }

// e^{-x} I_{1/2}(x) = sqrt(2/(pi x)) (1 - e^{-2x}) / 2
double i_half_scaled(double x) {
  if (x < 1e-4) {
    // expm1 keeps full precision for tiny arguments
    return std::sqrt(2.0 / (kPi * x)) * 0.5 * (-std::expm1(-2.0 * x));
  }
  return std::sqrt(2.0 / (kPi * x)) * 0.5 * (1.0 - std::exp(-2.0 * x));
}

// J with index allowed down to -1 (nu = -1/2), used by zero refinement.
double bessel_J_index(int idx, double x) {
  if (idx < 0) return j_minus_half(x);
  return bessel_J(HalfIntOrder::from_twice(2 * idx + 1), x);
}

double refine_zero(HalfIntOrder nu, double lo, double hi) {
  double flo = bessel_J(nu, lo);
  for (int it = 0; it < 80 && hi - lo > 1e-6; ++it) {
    double mid = 0.5 * (lo + hi);
    double fm = bessel_J(nu, mid);
    if (fm == 0.0) return mid;
    if (flo * fm < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  // Newton polish with J' = (J_{nu-1} - J_{nu+1}) / 2, clamped to the bracket.
  double x = 0.5 * (lo + hi);
  const int idx = nu.index();
  for (int it = 0; it < 8; ++it) {
    double f = bessel_J(nu, x);
    double fp = 0.5 * (bessel_J_index(idx - 1, x) - bessel_J_index(idx + 1, x));
    if (fp == 0.0) break;
    double xn = x - f / fp;
    if (xn <= lo || xn >= hi) xn = 0.5 * (lo + hi);
    if (std::abs(xn - x) < 1e-15 * x) {
      x = xn;
      break;
    }
    x = xn;
  }
  return x;
}

}  // namespace

HalfIntOrder HalfIntOrder::from_twice(int two_nu) {
  if (two_nu < 1 || two_nu % 2 == 0)
    throw std::invalid_argument("HalfIntOrder: 2*nu must be odd and positive");
  return HalfIntOrder{two_nu};
}

double bessel_J(HalfIntOrder nu, double x) {
  if (!(x > 0.0)) throw std::domain_error("bessel_J: requires x > 0");
  const int n = nu.index();
  if (x >= nu.value() || n == 0) {
    double jm = j_minus_half(x);
    double jc = j_half(x);
    for (int i = 0; i < n; ++i) {
      double jp = (2.0 * (i + 0.5) / x) * jc - jm;
      jm = jc;
      jc = jp;
    }
    return jc;
  }
  // Miller backward recurrence; normalize against the larger of sin/cos seeds.
  int top = n + 20 + static_cast<int>(x);
  double fp = 0.0;       // f_{i+1}
  double fc = 1e-300;    // f_i
  double ftarget = 0.0;
  for (int i = top; i >= 0; --i) {
    double fm = (2.0 * (i + 0.5) / x) * fc - fp;  // f_{i-1}
    if (i == n) ftarget = fc;
    fp = fc;
    fc = fm;
    if (std::abs(fc) > 1e250) {
      fc *= 1e-250;
      fp *= 1e-250;
      ftarget *= 1e-250;
    }
  }
  // After the loop fc = f_{-1} (nu = -1/2), fp = f_0 (nu = 1/2).
  double scale;
  if (std::abs(std::sin(x)) >= std::abs(std::cos(x)))
    scale = j_half(x) / fp;
  else
    scale = j_minus_half(x) / fc;
  return ftarget * scale;
}

double bessel_I_scaled(HalfIntOrder nu, double x) {
  if (!(x > 0.0)) throw std::domain_error("bessel_I: requires x > 0");
  const int n = nu.index();
  int top = n + 25 + static_cast<int>(std::ceil(1.5 * x));
  if (top > 2000000) throw std::domain_error("bessel_I: argument too large");
  double fp = 0.0;
  double fc = 1e-300;
  double ftarget = 0.0;
  for (int i = top; i >= 1; --i) {
    double fm = fp + (2.0 * (i + 0.5) / x) * fc;  // I_{nu-1} = I_{nu+1} + (2nu/x) I_nu
    if (i == n) ftarget = fc;
    fp = fc;
    fc = fm;
    if (std::abs(fc) > 1e250) {
      fc *= 1e-250;
      fp *= 1e-250;
      ftarget *= 1e-250;
    }
  }
  if (n == 0) ftarget = fc;
  return ftarget * (i_half_scaled(x) / fc);
}

double bessel_I(HalfIntOrder nu, double x) {
  double scaled = bessel_I_scaled(nu, x);
  if (x > 690.0) {
    double lg = x + std::log(std::abs(scaled) + 1e-320);
    if (lg > 709.0) throw std::overflow_error("bessel_I: overflow, use bessel_I_scaled");
  }
  return scaled * std::exp(x);
}

double bessel_IP(HalfIntOrder nu, double z) {
  if (z < 0.0) throw std::domain_error("bessel_IP: requires z >= 0");
  const double q = 0.25 * z * z;
  double term = 1.0 / gamma_half(nu.two_nu + 2);  // 1/Gamma(nu+1)
  double sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= q / (k * (nu.value() + k));
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}

double bessel_JP(HalfIntOrder nu, double z) {
  if (z < 0.0) throw std::domain_error("bessel_JP: requires z >= 0");
  // Alternating series; extended precision absorbs the cancellation that
  // sets in for z beyond a few units.
  const __float128 q = 0.25 * static_cast<__float128>(z) * z;
  __float128 term = 1.0 / gamma_half(nu.two_nu + 2);
  __float128 sum = term;
  const __float128 v = nu.value();
  for (int k = 1; k < 800; ++k) {
    term *= -q / (k * (v + k));
    sum += term;
    __float128 a = term < 0 ? -term : term;
    __float128 s = sum < 0 ? -sum : sum;
    if (k > z && a < 1e-36 * (s + 1e-300)) break;
  }
  return static_cast<double>(sum);
}

std::vector<double> bessel_zeros(HalfIntOrder nu, int n) {
  if (n < 1) throw std::invalid_argument("bessel_zeros: n must be >= 1");
  std::vector<double> zeros;
  zeros.reserve(n);
  const double v = nu.value();
  double x = std::max(0.5, 0.5 * v);
  const double step = 0.25;
  double fprev = bessel_J(nu, x);
  while (static_cast<int>(zeros.size()) < n) {
    double xn = x + step;
    double f = bessel_J(nu, xn);
    if (f == 0.0) {
      zeros.push_back(xn);
    } else if (fprev * f < 0.0) {
      zeros.push_back(refine_zero(nu, x, xn));
    }
    x = xn;
    fprev = f;
  }
  return zeros;
}

double gamma_half(int two_a) {
  if (two_a < 1 || two_a % 2 == 0)
    throw std::invalid_argument("gamma_half: 2a must be odd and positive");
  double g = std::sqrt(kPi);
  for (int t = 1; t + 2 <= two_a; t += 2) g *= 0.5 * t;
  return g;
}

}  // namespace diracband::specfun
