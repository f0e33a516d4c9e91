// Monte Carlo estimators and the support function for ball intersections.
#include "ballm/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "ballm/bodies.hpp"
#include "ballm/skeleton.hpp"

namespace ballm {

namespace {

Vec3 project_to_ball(const Vec3& p, const Sphere& s) {
  const Vec3 d = p - s.center;
  const double n = d.norm();
  if (n <= s.radius) return p;
  return s.center + d * (s.radius / n);
}

Vec3 set_centroid(const BallSet& set) {
  Vec3 c{0.0, 0.0, 0.0};
  for (const Sphere& s : set.balls) c = c + s.center;
  return c / static_cast<double>(set.size());
}

struct DykstraResult {
  Vec3 p;
  bool converged = false;
  double last_move = 0.0;
};

// Nearest point of the intersection to `start` via Dykstra's alternating
// projections (plain cyclic projection would find some feasible point, not the
// nearest one, so the supremum over the far plane would be biased low).
DykstraResult dykstra_nearest(const BallSet& set, Vec3 p, double tol,
                              int max_sweeps) {
  const size_t m = set.size();
  std::vector<Vec3> corr(m, Vec3{0.0, 0.0, 0.0});
  double moved = 0.0;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    const Vec3 before = p;
    for (size_t i = 0; i < m; ++i) {
      const Vec3 w = p + corr[i];
      const Vec3 q = project_to_ball(w, set.balls[i]);
      corr[i] = w - q;
      p = q;
    }
    moved = (p - before).norm();
    if (moved < tol) return {p, true, moved};
  }
  return {p, false, moved};
}

// Two touching-point candidates where three sphere surfaces meet.
std::vector<Vec3> trilaterate(const Sphere& a, const Sphere& b, const Sphere& c) {
  const Vec3 ab = b.center - a.center;
  const double d = ab.norm();
  if (d < 1e-12) return {};
  const Vec3 ex = ab / d;
  const Vec3 ac = c.center - a.center;
  const double i = dot(ex, ac);
  const Vec3 ey_raw = ac - i * ex;
  const double ey_n = ey_raw.norm();
  if (ey_n < 1e-12) return {};  // collinear centers
  const Vec3 ey = ey_raw / ey_n;
  const Vec3 ez = cross(ex, ey);
  const double j = dot(ey, ac);
  const double x = (a.radius * a.radius - b.radius * b.radius + d * d) / (2.0 * d);
  const double y = (a.radius * a.radius - c.radius * c.radius + i * i + j * j -
                    2.0 * i * x) /
                   (2.0 * j);
  const double z2 = a.radius * a.radius - x * x - y * y;
  if (z2 < -1e-10) return {};
  const double z = std::sqrt(std::max(0.0, z2));
  const Vec3 base = a.center + x * ex + y * ey;
  if (z == 0.0) return {base};
  return {base + z * ez, base - z * ez};
}

}  // namespace

double support_function(const BallSet& set, const Direction& u, double tol) {
  if (!(tol > 0.0)) throw std::domain_error("tolerance must be positive");
  const Vec3 uv = u.vec();
  if (set.size() == 1) {
    const Sphere& s = set.balls[0];
    return dot(uv, s.center) + s.radius;
  }

  double scale = 0.0;
  for (const Sphere& s : set.balls)
    scale = std::max(scale, s.center.norm() + s.radius);
  const double far = 100.0 * scale;

  const DykstraResult res =
      dykstra_nearest(set, set_centroid(set) + far * uv, tol, 100000);
  const Vec3 p = res.p;
  if (!point_in_ballset(p, set, 1e-6))
    throw std::invalid_argument("support function of an empty intersection");
  if (!res.converged)
    throw std::runtime_error(
        "projection did not converge within 100000 sweeps; last iterate (" +
        std::to_string(p.x) + ", " + std::to_string(p.y) + ", " +
        std::to_string(p.z) + ") moved " + std::to_string(res.last_move) +
        " in the final sweep");

  // Touching-face refinement: the projection identifies which sphere surfaces
  // the maximizer lies on; closed-form candidates on those surfaces remove the
  // O(scale^2 / far) foreshortening bias of the projected point itself.
  std::vector<int> active;
  for (size_t i = 0; i < set.size(); ++i)
    if ((p - set.balls[i].center).norm() >= set.balls[i].radius - 1e-4)
      active.push_back(static_cast<int>(i));

  std::vector<Vec3> candidates;
  for (size_t ai = 0; ai < active.size(); ++ai) {
    const Sphere& a = set.balls[active[ai]];
    candidates.push_back(a.center + a.radius * uv);
    for (size_t bi = ai + 1; bi < active.size(); ++bi) {
      const Sphere& b = set.balls[active[bi]];
      if ((b.center - a.center).norm() < 1e-12) continue;  // concentric
      const PairIntersection pi = intersection_circle(a, b);
      if (pi.kind == PairContact::circle) {
        const IntersectionCircle& c = *pi.circle;
        const Vec3 ut = uv - dot(uv, c.normal) * c.normal;
        const double utn = ut.norm();
        if (utn > 1e-12) candidates.push_back(c.center + c.radius * (ut / utn));
      } else if (pi.kind == PairContact::tangent_point) {
        candidates.push_back(*pi.point);
      }
      for (size_t ci = bi + 1; ci < active.size(); ++ci)
        for (const Vec3& v : trilaterate(a, b, set.balls[active[ci]]))
          candidates.push_back(v);
    }
  }

  double best = dot(uv, p);
  for (const Vec3& c : candidates)
    if (point_in_ballset(c, set, 1e-9)) best = std::max(best, dot(uv, c));
  return best;
}

Estimate mc_volume(const BallSet& set, const McConfig& cfg, int max_workers) {
  return mc_volume_body(BallIntersectionBody(set), cfg, max_workers);
}

Estimate mc_surface_area(const BallSet& set, const McConfig& cfg, int max_workers) {
  return mc_area_body(BallIntersectionBody(set), cfg, max_workers);
}

Estimate mc_mean_width(const BallSet& set, std::int64_t n_dirs, std::uint64_t seed,
                       int max_workers) {
  return mc_mean_width_body(BallIntersectionBody(set), n_dirs, seed, max_workers);
}

bool intersection_empty(const BallSet& set) {
  if (set.size() == 1) return false;
  Vec3 p = set_centroid(set);
  for (int sweep = 0; sweep < 20000; ++sweep) {
    const Vec3 before = p;
    for (const Sphere& s : set.balls) p = project_to_ball(p, s);
    if ((p - before).norm() < 1e-13) break;
  }
  return !point_in_ballset(p, set, 1e-9);
}

}  // namespace ballm
