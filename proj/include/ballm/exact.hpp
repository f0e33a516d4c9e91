// Closed-form volume, surface area, and mean width for bodies built from unit spheres:
// two-ball lenses, the three/four-ball solids, the Meissner companion values, and the
// constant-width comparison bodies (capped cylinder, symmetric segment, cap body).
#pragma once

#include <algorithm>

#include "ballm/geometry.hpp"

namespace ballm {

// Half-opening angle in [0, pi/2]; for a two-ball lens, delta = 2 cos(phi).
// Values within 1e-9 past a bound are clamped, so decimal renderings of pi/2
// round-trip.
class AngularRadius {
 public:
  explicit AngularRadius(double phi) {
    if (!std::isfinite(phi) || phi < -1e-9 || phi > pi_half() + 1e-9)
      throw std::domain_error("angular radius must lie in [0, pi/2]");
    v_ = std::min(std::max(phi, 0.0), pi_half());
  }
  double value() const { return v_; }

 private:
  static double pi_half() { return std::acos(0.0); }
  double v_;
};

// Distance between the two unit-sphere centers of a lens, in [0, 2].
// Values within 1e-9 past a bound are clamped.
class CenterDistance {
 public:
  explicit CenterDistance(double delta) {
    if (!std::isfinite(delta) || delta < -1e-9 || delta > 2.0 + 1e-9)
      throw std::domain_error("center distance must lie in [0, 2]");
    v_ = std::min(std::max(delta, 0.0), 2.0);
  }
  double value() const { return v_; }

 private:
  double v_;
};

// Length of the cylindrical section of a capped cylinder, >= 0.
class CylinderLength {
 public:
  explicit CylinderLength(double ell) : v_(ell) {
    if (!std::isfinite(ell) || ell < 0.0)
      throw std::domain_error("cylinder length must be >= 0 and finite");
  }
  double value() const { return v_; }

 private:
  double v_;
};

// arcsec(x) = arccos(1/x) for x >= 1.
double arcsec(double x);

// Two unit balls whose centers are one radius apart (lens at phi = pi/3).
Measures dihedron_measures();

// Two unit balls at center distance 2 cos(phi).
Measures lens_measures(AngularRadius phi);

// Lens volume parametrized by the center distance instead of the angle.
double lens_volume_from_delta(CenterDistance delta);

// Three unit balls, centers mutually one radius apart.
Measures trihedron_measures();

// Four unit balls, centers at regular tetrahedron vertices one radius apart.
Measures reuleaux_tetrahedron_measures();

// The smoothed constant-width companion of the Reuleaux tetrahedron.
Measures meissner_measures();

// Unit-radius hemispherical caps joined by a cylinder of length ell.
Measures capped_cylinder_measures(CylinderLength ell);

// Unit ball truncated by two symmetric parallel planes at height +-cos(phi).
Measures symmetric_segment_measures(AngularRadius phi);

// Convex hull of the unit ball and two symmetric points at distance 1/cos(phi); phi < pi/2.
Measures cap_body_measures(AngularRadius phi);

}  // namespace ballm
