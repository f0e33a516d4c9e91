// n-dimensional two-ball lens: gamma, hypergeometric series, and reductions
// against oracles computed here by other means (closed forms and 1-D quadrature).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "ballm/hyperlens.hpp"
#include "ballm/quadrature.hpp"

using namespace ballm;

namespace {
constexpr double kPi = std::numbers::pi;

double unit_ball_volume(int n) {
  return std::pow(kPi, n / 2.0) / gamma_real(1.0 + n / 2.0);
}
double unit_sphere_area(int n) {  // surface of the unit ball in R^n
  return 2.0 * std::pow(kPi, n / 2.0) / gamma_real(n / 2.0);
}
}  // namespace

TEST_CASE("real gamma function") {
  CHECK(gamma_real(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_real(2.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_real(5.0) == doctest::Approx(24.0).epsilon(1e-14));
  CHECK(gamma_real(0.5) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-14));
  CHECK(gamma_real(2.5) ==
        doctest::Approx(3.0 * std::sqrt(kPi) / 4.0).epsilon(1e-14));
  // recurrence Gamma(x+1) = x Gamma(x) across a spread of arguments
  for (double x : {0.1, 0.7, 1.3, 3.9, 12.5, 47.0})
    CHECK(gamma_real(x + 1.0) == doctest::Approx(x * gamma_real(x)).epsilon(1e-13));
  CHECK_THROWS_AS(gamma_real(0.0), std::domain_error);
  CHECK_THROWS_AS(gamma_real(-1.5), std::domain_error);
}

TEST_CASE("hypergeometric series identities") {
  // 2F1(a, 0; c; z) = 1
  CHECK(gauss_2f1({0.5, 0.0, 1.5, 0.7}) == doctest::Approx(1.0).epsilon(1e-14));
  // terminating series: 2F1(1/2, -1; 3/2; z) = 1 - z/3
  for (double z : {0.0, 0.3, 0.9, 0.99})
    CHECK(gauss_2f1({0.5, -1.0, 1.5, z}) ==
          doctest::Approx(1.0 - z / 3.0).epsilon(1e-14));
  // 2F1(1/2, 1/2; 3/2; z^2) = arcsin(z) / z
  for (double z : {0.1, 0.5, 0.8})
    CHECK(gauss_2f1({0.5, 0.5, 1.5, z * z}) ==
          doctest::Approx(std::asin(z) / z).epsilon(1e-13));
  // z = 0 gives the leading term
  CHECK(gauss_2f1({1.7, 2.3, 0.9, 0.0}) == 1.0);
  CHECK_THROWS_AS(gauss_2f1({0.5, 0.5, 1.5, 1.0}), std::domain_error);
  CHECK_THROWS_AS(gauss_2f1({0.5, 0.5, 1.5, -0.1}), std::domain_error);
  CHECK_THROWS_AS(gauss_2f1({0.5, 0.5, -2.0, 0.5}), std::domain_error);
}

TEST_CASE("dimension parameter validation") {
  CHECK_THROWS_AS(Dimension(1), std::domain_error);
  CHECK_THROWS_AS(Dimension(0), std::domain_error);
  CHECK(Dimension(2).value() == 2);
}

TEST_CASE("n = 3 reduces to the closed-form lens measures") {
  for (double phi : {0.05, 0.3, kPi / 6.0, 0.8, kPi / 3.0, 1.25, 1.5, kPi / 2.0}) {
    const Measures lm = lens_measures(AngularRadius(phi));
    CHECK(ndim_lens_volume(Dimension(3), AngularRadius(phi)) ==
          doctest::Approx(lm.volume).epsilon(1e-12));
    CHECK(ndim_lens_area(Dimension(3), AngularRadius(phi)) ==
          doctest::Approx(lm.surface_area).epsilon(1e-12));
  }
}

TEST_CASE("phi = pi/2 gives the full unit ball in every dimension") {
  for (int n = 2; n <= 10; ++n) {
    CHECK(ndim_lens_volume(Dimension(n), AngularRadius(kPi / 2.0)) ==
          doctest::Approx(unit_ball_volume(n)).epsilon(1e-12));
    CHECK(ndim_lens_area(Dimension(n), AngularRadius(kPi / 2.0)) ==
          doctest::Approx(unit_sphere_area(n)).epsilon(1e-12));
  }
}

TEST_CASE("phi = 0 gives the degenerate single point") {
  for (int n : {2, 3, 5, 8}) {
    CHECK(ndim_lens_volume(Dimension(n), AngularRadius(0.0)) == 0.0);
    CHECK(ndim_lens_area(Dimension(n), AngularRadius(0.0)) == 0.0);
  }
}

TEST_CASE("n = 2: circular lens against the planar closed form") {
  // two unit disks at center distance 2 cos(phi):
  // area = 2 phi - sin(2 phi), perimeter = 4 phi
  for (double phi : {0.2, kPi / 6.0, kPi / 3.0, 1.2, 1.5}) {
    CHECK(ndim_lens_volume(Dimension(2), AngularRadius(phi)) ==
          doctest::Approx(2.0 * phi - std::sin(2.0 * phi)).epsilon(1e-12));
    CHECK(ndim_lens_area(Dimension(2), AngularRadius(phi)) ==
          doctest::Approx(4.0 * phi).epsilon(1e-12));
  }
  // frozen value at phi = pi/3: 2 pi/3 - sqrt(3)/2
  CHECK(ndim_lens_volume(Dimension(2), AngularRadius(kPi / 3.0)) ==
        doctest::Approx(1.22836969860875684).epsilon(1e-13));
}

TEST_CASE("n = 4 and n = 5 against slice quadrature and cap closed forms") {
  for (double phi : {0.4, 0.9, 1.3}) {
    const double c = std::cos(phi);
    // volume: two caps, each sliced into 3-balls (n=4) / 4-balls (n=5)
    const auto slice4 = [](double t) {
      return (4.0 * kPi / 3.0) * std::pow(1.0 - t * t, 1.5);
    };
    const double v4 = 2.0 * integrate(slice4, c, 1.0, 1e-13, 20000).value;
    CHECK(ndim_lens_volume(Dimension(4), AngularRadius(phi)) ==
          doctest::Approx(v4).epsilon(1e-11));
    // n=5 slice volumes are polynomials; integral is exact
    const double v5 =
        2.0 * (kPi * kPi / 2.0) *
        ((8.0 / 15.0) - (c - 2.0 * c * c * c / 3.0 + std::pow(c, 5.0) / 5.0));
    CHECK(ndim_lens_volume(Dimension(5), AngularRadius(phi)) ==
          doctest::Approx(v5).epsilon(1e-12));
    // area: two spherical caps of the unit sphere in R^4 / R^5
    const double a4 = 2.0 * 2.0 * kPi * (phi - std::sin(phi) * std::cos(phi));
    CHECK(ndim_lens_area(Dimension(4), AngularRadius(phi)) ==
          doctest::Approx(a4).epsilon(1e-12));
    const double a5 =
        2.0 * 2.0 * kPi * kPi * (std::pow(c, 3.0) / 3.0 - c + 2.0 / 3.0);
    CHECK(ndim_lens_area(Dimension(5), AngularRadius(phi)) ==
          doctest::Approx(a5).epsilon(1e-12));
  }
}

TEST_CASE("measures are nondecreasing in phi for several dimensions") {
  for (int n : {2, 3, 4, 7}) {
    double prev_v = -1.0, prev_a = -1.0;
    for (int k = 0; k <= 12; ++k) {
      const double phi = kPi / 2.0 * k / 12.0;
      const double v = ndim_lens_volume(Dimension(n), AngularRadius(phi));
      const double a = ndim_lens_area(Dimension(n), AngularRadius(phi));
      CHECK(v >= prev_v - 1e-14);
      CHECK(a >= prev_a - 1e-14);
      prev_v = v;
      prev_a = a;
    }
  }
}
