// Full measure pipeline for an intersection of equal-radius balls: boundary
// decomposition for area and mean width, divergence-theorem volume with a
// Monte Carlo fallback, and the adjacent vertex-to-vertex distance.
#pragma once

#include <string>

#include "ballm/geometry.hpp"
#include "ballm/montecarlo.hpp"

namespace ballm {

enum class VolumeMethod { divergence, monte_carlo };

struct BallSetMeasures {
  Measures measures;
  bool empty = false;          // the balls have no common point
  VolumeMethod volume_method = VolumeMethod::divergence;
  double volume_std_error = 0.0;  // nonzero only for the Monte Carlo fallback
};

// Measures of the intersection of the balls. Surface area is the sum of the
// boundary face areas, mean width comes from the face/edge curvature formula,
// and volume is the divergence-theorem surface integral (falling back to
// Monte Carlo with `fallback` if the patch integrator reports failure).
// Throws std::invalid_argument when the radii are not all equal; an empty
// intersection yields zero measures with the `empty` flag set.
BallSetMeasures ballset_measures(const BallSet& set, const McConfig& fallback = {});

// Smallest pairwise distance between boundary vertices (points where three or
// more sphere surfaces meet). Throws std::invalid_argument when the body has
// fewer than two vertices.
double adjacent_vertex_distance(const BallSet& set);

}  // namespace ballm
