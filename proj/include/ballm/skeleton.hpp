// Boundary skeleton of an intersection of balls: pairwise intersection circles, the edge
// arcs that survive clipping by the remaining balls, spherical face patches with
// Gauss-Bonnet areas, and the curvature-based mean width assembled from faces and edges.
#pragma once

#include <optional>
#include <vector>

#include "ballm/geometry.hpp"

namespace ballm {

// Circle where two sphere surfaces meet. The normal points from sphere i toward sphere j,
// and (e1, e2, normal) is a right-handed frame: e1 is the unit projection of global +z
// onto the circle plane (+x instead when the normal is within 1e-8 of +-z), e2 = n x e1.
struct IntersectionCircle {
  Vec3 center;
  double radius = 0.0;
  Vec3 normal;
  Vec3 e1, e2;
  int i = -1, j = -1;

  Vec3 point(double theta) const {
    return center + radius * (std::cos(theta) * e1 + std::sin(theta) * e2);
  }
  Vec3 tangent(double theta) const {
    return e2 * std::cos(theta) - e1 * std::sin(theta);
  }
};

enum class PairContact { circle, tangent_point, none };

struct PairIntersection {
  PairContact kind = PairContact::none;
  std::optional<IntersectionCircle> circle;
  std::optional<Vec3> point;  // set for tangent_point
};

// Throws std::domain_error when the two centers coincide (no radical plane).
PairIntersection intersection_circle(const Sphere& a, const Sphere& b, int i = -1, int j = -1);

// Angle between the outward surface normals along the shared circle; for unit spheres at
// center distance delta this is arccos(1 - delta^2 / 2).
double exterior_dihedral_angle(const Sphere& a, const Sphere& b);

// Half-open angular interval [start, end) with start in [0, 2pi) and end <= start + 2pi.
struct AngularInterval {
  double start = 0.0;
  double end = 0.0;
  double width() const { return end - start; }
};

// Angular subset of the circle lying inside every ball of the set except the two spheres
// that generate the circle. Near-tangent slivers shorter than 1e-10 radians are dropped.
std::vector<AngularInterval> clip_circle_by_balls(const IntersectionCircle& c,
                                                  const BallSet& set);

struct EdgeArc {
  IntersectionCircle circle;
  AngularInterval interval;
  double arc_length = 0.0;      // radius * interval width
  double exterior_angle = 0.0;  // constant along the arc
};

// One entry per surviving arc over all unordered sphere pairs.
std::vector<EdgeArc> edge_arcs(const BallSet& set);

struct FacePatch {
  int sphere_index = -1;
  double area = 0.0;
  double curvature_radius = 0.0;
};

// Per-sphere boundary patch areas via Gauss-Bonnet on each sphere: a boundary arc on a
// circle of angular radius rho contributes cos(rho) per radian of turn (geodesic
// curvature cot(rho)/r), vertices contribute their tangent turning angles, and a face
// bounded by a single full circle reduces to the spherical cap 2 pi r^2 (1 - cos rho).
std::vector<FacePatch> face_areas(const BallSet& set);

struct Vertex {
  Vec3 position;
  std::vector<int> spheres;  // indices of the spheres meeting there (>= 3)
};

// Arc endpoints grouped by position (1e-8 tolerance).
std::vector<Vertex> body_vertices(const BallSet& set);

// Mean width from boundary curvature: (1/2pi) sum_f A_f / r_f + (1/4pi) sum_e alpha_e L_e.
double indirect_mean_width(const std::vector<FacePatch>& faces,
                           const std::vector<EdgeArc>& edges);

}  // namespace ballm
