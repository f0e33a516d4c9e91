// Deterministic volume and area evaluators: double integrals of explicit surface height
// fields over planar domains for the two/three/four-ball solids, and a divergence-theorem
// volume for any equal-radius ball intersection using its face patches.
#pragma once

#include "ballm/geometry.hpp"

namespace ballm {

enum class HeightFieldSolid { dihedron, trihedron, tetrahedron };

// Volume of the solid as a sum of symmetric columns under z = f(x, y), evaluated by
// adaptive quadrature with a square-root substitution at the face rim.
double height_field_volume(HeightFieldSolid solid, double abs_tol = 1e-9);

// Matching surface area via the graph element sqrt(1 + fx^2 + fy^2); the integrable rim
// singularity is removed by the same substitution.
double height_field_area(HeightFieldSolid solid, double abs_tol = 1e-9);

// V = (1/3) * surface integral of x . n over the boundary, one spherical patch per face,
// integrated in pole-centered spherical coordinates (polar angle analytically, azimuth
// adaptively with splits at vertex azimuths). Target absolute error abs_tol.
double divergence_volume(const BallSet& set, double abs_tol = 1e-9);

}  // namespace ballm
