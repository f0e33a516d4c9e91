#include "ballm/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ballm/integrals.hpp"
#include "ballm/skeleton.hpp"

namespace ballm {

BallSetMeasures ballset_measures(const BallSet& set, const McConfig& fallback) {
  const double r0 = set.balls[0].radius;
  for (const Sphere& s : set.balls)
    if (std::abs(s.radius - r0) > 1e-12 * r0)
      throw std::invalid_argument("unequal radii are unsupported here");

  BallSetMeasures out;
  if (intersection_empty(set)) {
    out.empty = true;
    return out;
  }

  const auto faces = face_areas(set);
  const auto edges = edge_arcs(set);
  double area = 0.0;
  for (const FacePatch& f : faces) area += f.area;
  out.measures.surface_area = area;
  out.measures.mean_width = indirect_mean_width(faces, edges);

  // Volume tolerance follows the body's linear scale so results stay
  // proportionally accurate for rescaled sets.
  double scale = 0.0;
  for (const Sphere& s : set.balls)
    scale = std::max(scale, s.center.norm() + s.radius);
  const double vol_tol = 1e-10 * std::max(1.0, scale * scale * scale);
  try {
    out.measures.volume = divergence_volume(set, vol_tol);
    out.volume_method = VolumeMethod::divergence;
  } catch (const std::exception&) {
    const Estimate est = mc_volume(set, fallback);
    out.measures.volume = est.value;
    out.volume_method = VolumeMethod::monte_carlo;
    out.volume_std_error = est.std_error;
  }
  return out;
}

double adjacent_vertex_distance(const BallSet& set) {
  const auto verts = body_vertices(set);
  if (verts.size() < 2)
    throw std::invalid_argument(
        "adjacent vertex distance needs at least two vertices");
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      best = std::min(best, (verts[i].position - verts[j].position).norm());
  return best;
}

}  // namespace ballm
