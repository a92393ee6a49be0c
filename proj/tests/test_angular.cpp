#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "diracband/angular.hpp"

using namespace diracband;
using namespace diracband::angular;

namespace {
constexpr double kPi = 3.14159265358979323846;

AngularSector sec(int two_j, int two_m) { return AngularSector(two_j, two_m, SpinorType::Phi); }

const double kThetas[] = {0.4, 1.1, 1.9, 2.7};
const double kPhis[] = {0.3, 1.7, 3.9, 5.6};
}  // namespace

TEST_CASE("spherical harmonic base values") {
  CHECK(spherical_harmonic(0, 0, 0.7, 1.3).real() ==
        doctest::Approx(1.0 / std::sqrt(4.0 * kPi)).epsilon(1e-14));
  CHECK(spherical_harmonic(0, 0, 0.7, 1.3).imag() == doctest::Approx(0.0));
  CHECK(spherical_harmonic(1, 0, 1e-12, 0.0).real() ==
        doctest::Approx(std::sqrt(3.0 / (4.0 * kPi))).epsilon(1e-12));
  CHECK_THROWS_AS(spherical_harmonic(1, 2, 0.3, 0.3), std::out_of_range);
}

TEST_CASE("spherical harmonic orthonormality by quadrature") {
  auto asF = [](int l, int n) {
    return [l, n](double t, double p) {
      TwoSpinor s;
      s.up = spherical_harmonic(l, n, t, p);
      return s;
    };
  };
  // <Y_1^0, Y_2^0> = 0
  CHECK(std::abs(sphere_inner(asF(1, 0), asF(2, 0))) < 1e-10);
  // a few norms and cross terms
  for (int l = 0; l <= 5; ++l) {
    CHECK(std::abs(sphere_inner(asF(l, 0), asF(l, 0)) - 1.0) < 1e-10);
    CHECK(std::abs(sphere_inner(asF(l, std::min(l, 2)), asF(l, std::min(l, 2))) - 1.0) < 1e-10);
  }
  CHECK(std::abs(sphere_inner(asF(3, 1), asF(5, 1))) < 1e-10);
  CHECK(std::abs(sphere_inner(asF(4, -2), asF(4, 2))) < 1e-10);
}

TEST_CASE("spherical harmonic parity") {
  for (int l = 0; l <= 6; ++l)
    for (int n = -l; n <= l; ++n)
      for (double t : kThetas)
        for (double p : kPhis) {
          auto a = spherical_harmonic(l, n, kPi - t, p + kPi);
          auto b = spherical_harmonic(l, n, t, p);
          double sign = (l % 2 == 0) ? 1.0 : -1.0;
          CHECK(std::abs(a - sign * b) < 1e-12);
        }
}

TEST_CASE("spinor harmonic j=1/2 m=1/2 plus is (Y00, 0)") {
  auto s = spinor_harmonic(sec(1, 1), HarmonicBranch::Plus, 0.9, 2.1);
  CHECK(std::abs(s.up - Complex(1.0 / std::sqrt(4.0 * kPi), 0.0)) < 1e-14);
  CHECK(std::abs(s.dn) < 1e-14);
}

TEST_CASE("spinor harmonics are J3 eigenstates") {
  for (int two_j : {1, 3, 7}) {
    for (int two_m = -two_j; two_m <= two_j; two_m += 2) {
      for (auto branch : {HarmonicBranch::Plus, HarmonicBranch::Minus}) {
        auto field = [&](double t, double p) {
          return spinor_harmonic(sec(two_j, two_m), branch, t, p);
        };
        for (double t : kThetas) {
          auto got = apply_j3(field, t, 0.8);
          auto want = field(t, 0.8) * Complex(0.5 * two_m, 0.0);
          CHECK((got - want).norm2() < 1e-18);
        }
      }
    }
  }
}

TEST_CASE("spinor harmonic normalization on the sphere") {
  auto field = [](double t, double p) {
    return spinor_harmonic(sec(7, 3), HarmonicBranch::Minus, t, p);
  };
  CHECK(std::abs(sphere_inner(field, field) - 1.0) < 1e-10);

  // mutual orthogonality of the plus/minus branches
  auto plus = [](double t, double p) {
    return spinor_harmonic(sec(7, 3), HarmonicBranch::Plus, t, p);
  };
  CHECK(std::abs(sphere_inner(plus, field)) < 1e-10);
}

TEST_CASE("sigma.L eigen-relations") {
  // plus branch: eigenvalue j - 1/2; minus branch: -(j + 3/2)
  auto s1 = apply_sigma_dot_L(sec(7, 3), HarmonicBranch::Plus, 1.2, 0.5);
  auto w1 = spinor_harmonic(sec(7, 3), HarmonicBranch::Plus, 1.2, 0.5) * Complex(3.0, 0.0);
  CHECK((s1 - w1).norm2() < 1e-18);

  auto s2 = apply_sigma_dot_L(sec(1, 1), HarmonicBranch::Minus, 1.2, 0.5);
  auto w2 = spinor_harmonic(sec(1, 1), HarmonicBranch::Minus, 1.2, 0.5) * Complex(-2.0, 0.0);
  CHECK((s2 - w2).norm2() < 1e-18);

  for (int two_j = 1; two_j <= 21; two_j += 2) {
    double j = 0.5 * two_j;
    for (int two_m = -two_j; two_m <= two_j; two_m += 2) {
      for (double t : kThetas) {
        auto rp = apply_sigma_dot_L(sec(two_j, two_m), HarmonicBranch::Plus, t, 2.2) -
                  spinor_harmonic(sec(two_j, two_m), HarmonicBranch::Plus, t, 2.2) *
                      Complex(j - 0.5, 0.0);
        CHECK(std::sqrt(rp.norm2()) < 1e-8);
        auto rm = apply_sigma_dot_L(sec(two_j, two_m), HarmonicBranch::Minus, t, 2.2) -
                  spinor_harmonic(sec(two_j, two_m), HarmonicBranch::Minus, t, 2.2) *
                      Complex(-(j + 1.5), 0.0);
        CHECK(std::sqrt(rm.norm2()) < 1e-8);
      }
    }
  }

  CHECK_THROWS_AS(apply_sigma_dot_L(sec(3, 1), HarmonicBranch::Plus, 1e-9, 0.0),
                  std::domain_error);
}

TEST_CASE("sigma_r exchanges the branches and squares to one") {
  for (int two_j : {1, 3, 7, 11}) {
    for (int two_m = -two_j; two_m <= two_j; two_m += 2) {
      for (double t : kThetas)
        for (double p : kPhis) {
          auto plus = spinor_harmonic(sec(two_j, two_m), HarmonicBranch::Plus, t, p);
          auto minus = spinor_harmonic(sec(two_j, two_m), HarmonicBranch::Minus, t, p);
          CHECK((apply_sigma_r(plus, t, p) - minus).norm2() < 1e-24);
          CHECK((apply_sigma_r(minus, t, p) - plus).norm2() < 1e-24);
          // involution
          auto twice = apply_sigma_r(apply_sigma_r(plus, t, p), t, p);
          CHECK((twice - plus).norm2() < 1e-24);
          // pointwise density identity
          CHECK(std::abs(plus.norm2() - minus.norm2()) < 1e-12);
        }
    }
  }
}

TEST_CASE("four-spinor parity on antipodal pairs") {
  // gamma0 Phi^j_m(-r) = (-1)^{j-1/2} Phi^j_m(r) realized on the branch spinors:
  // Phi^{j(+)}(-r) = (-1)^{j-1/2} Phi^{j(+)}(r), Phi^{j(-)}(-r) = (-1)^{j+1/2} Phi^{j(-)}(r).
  for (int two_j : {1, 3, 7, 9}) {
    int lp = (two_j - 1) / 2;
    double sp = (lp % 2 == 0) ? 1.0 : -1.0;
    for (double t : kThetas)
      for (double p : kPhis) {
        auto a = spinor_harmonic(sec(two_j, 1), HarmonicBranch::Plus, kPi - t, p + kPi);
        auto b = spinor_harmonic(sec(two_j, 1), HarmonicBranch::Plus, t, p) * Complex(sp, 0.0);
        CHECK((a - b).norm2() < 1e-24);
        auto c = spinor_harmonic(sec(two_j, 1), HarmonicBranch::Minus, kPi - t, p + kPi);
        auto d = spinor_harmonic(sec(two_j, 1), HarmonicBranch::Minus, t, p) * Complex(-sp, 0.0);
        CHECK((c - d).norm2() < 1e-24);
      }
  }
}
