#include "ballm/exact.hpp"

#include <numbers>

namespace ballm {

namespace {
constexpr double kPi = std::numbers::pi;
}

double arcsec(double x) {
  if (!(x >= 1.0)) throw std::domain_error("arcsec requires x >= 1");
  return std::acos(1.0 / x);
}

Measures dihedron_measures() {
  return {5.0 * kPi / 12.0, 2.0 * kPi, 1.0 + kPi / (4.0 * std::sqrt(3.0))};
}

Measures lens_measures(AngularRadius phi) {
  const double c = std::cos(phi.value());
  const double s = std::sin(phi.value());
  // 1 - cos(phi) evaluated as 2 sin^2(phi/2): the direct subtraction loses
  // relative precision as phi -> 0, where the body shrinks like phi^2..phi^4.
  // (2 - 3c + c^3) factors exactly as (1 - c)^2 (2 + c).
  const double half = std::sin(0.5 * phi.value());
  const double one_minus_c = 2.0 * half * half;
  Measures m;
  m.volume = (2.0 * kPi / 3.0) * one_minus_c * one_minus_c * (2.0 + c);
  m.surface_area = 4.0 * kPi * one_minus_c;
  m.mean_width = 2.0 * one_minus_c + (kPi / 2.0 - phi.value()) * s;
  return m;
}

double lens_volume_from_delta(CenterDistance delta) {
  const double d = delta.value();
  // 1 - 3d/4 + d^3/16 factors exactly as (2 - d)^2 (4 + d) / 16; the factored
  // form stays accurate as d -> 2 where the plain polynomial cancels to zero.
  const double gap = 2.0 - d;
  return (kPi / 12.0) * gap * gap * (4.0 + d);
}

Measures trihedron_measures() {
  const double a3 = arcsec(3.0);
  Measures m;
  m.volume = (2.0 * std::sqrt(2.0) + 24.0 * kPi - 57.0 * a3) / 12.0;
  m.surface_area = 6.0 * (kPi - 2.0 * a3);
  m.mean_width = (12.0 * kPi - (24.0 - std::sqrt(3.0) * kPi) * a3) / (4.0 * kPi);
  return m;
}

Measures reuleaux_tetrahedron_measures() {
  const double a3 = arcsec(3.0);
  Measures m;
  m.volume = (3.0 * std::sqrt(2.0) + 32.0 * kPi - 81.0 * a3) / 12.0;
  m.surface_area = 2.0 * (4.0 * kPi - 9.0 * a3);
  m.mean_width = (16.0 * kPi - (36.0 - std::sqrt(3.0) * kPi) * a3) / (4.0 * kPi);
  return m;
}

Measures meissner_measures() {
  const double a3 = arcsec(3.0);
  Measures m;
  m.volume = (8.0 - 3.0 * std::sqrt(3.0) * a3) * kPi / 12.0;
  m.surface_area = (4.0 - std::sqrt(3.0) * a3) * kPi / 2.0;
  m.mean_width = 1.0;
  return m;
}

Measures capped_cylinder_measures(CylinderLength ell) {
  const double l = ell.value();
  return {(l + 4.0 / 3.0) * kPi, 2.0 * (l + 2.0) * kPi, (l + 4.0) / 2.0};
}

Measures symmetric_segment_measures(AngularRadius phi) {
  const double c = std::cos(phi.value());
  const double s = std::sin(phi.value());
  Measures m;
  m.volume = (2.0 * kPi / 3.0) * (2.0 + s * s) * c;
  m.surface_area = 2.0 * kPi * (2.0 * c + s * s);
  m.mean_width = 2.0 * c + phi.value() * s;
  return m;
}

Measures cap_body_measures(AngularRadius phi) {
  const double c = std::cos(phi.value());
  // the apex sits at distance 1/cos(phi); reject angles so close to pi/2 that
  // the body degenerates (cos(pi/2) rounds to ~6e-17, not 0)
  if (!(c > 1e-12)) throw std::domain_error("cap body requires phi < pi/2");
  const double f = (1.0 + c * c) / c;
  return {(2.0 * kPi / 3.0) * f, 2.0 * kPi * f, f};
}

}  // namespace ballm
