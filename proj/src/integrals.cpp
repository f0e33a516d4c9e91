#include "ballm/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "ballm/quadrature.hpp"
#include "ballm/skeleton.hpp"

namespace ballm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// ---- height fields -------------------------------------------------------------------
//
// All three solids are assembled from congruent columns between the base plane and the
// graph of one sphere's surface; symmetry multiplies each column integral by a count.
// The x-limits a(y) touch the sphere rim where f -> 0, so the inner integrals use the
// substitution x = a + u^2 (or y = a sin t for the two-ball solid), which removes the
// square-root edge behavior of both f and the area element.

struct Graph {
  // height and its in-plane gradient magnitude helper
  double cx, cy;  // sphere center in the base plane (z-component is 0)
  double f(double x, double y) const {
    const double dx = x - cx, dy = y - cy;
    return std::sqrt(std::max(0.0, 1.0 - dx * dx - dy * dy));
  }
  double area_element(double x, double y) const {
    const double dx = x - cx, dy = y - cy;
    const double ff = f(x, y);
    const double gx = -dx / ff, gy = -dy / ff;
    return std::sqrt(1.0 + gx * gx + gy * gy);
  }
};

double dihedron_integral(bool area, double abs_tol) {
  const Graph g{-0.5, 0.0};
  auto outer = [&](double x) {
    const double a = std::sqrt(std::max(0.0, 1.0 - (x + 0.5) * (x + 0.5)));
    if (a <= 0.0) return 0.0;
    auto inner = [&](double t) {
      const double y = a * std::sin(t);
      const double jac = a * std::cos(t);
      return (area ? g.area_element(x, y) : g.f(x, y)) * jac;
    };
    return integrate(inner, 0.0, kPi / 2.0, abs_tol * 0.05).value;
  };
  return 8.0 * integrate(outer, 0.0, 0.5, abs_tol * 0.5).value;
}

double three_four_integral(bool four, bool area, double abs_tol) {
  const double s3 = std::sqrt(3.0);
  const Graph top{1.0 / s3, 0.0};   // upper surface z = f
  const Graph low{0.0, 0.0};        // sliver floor z = sqrt(2/3) - sqrt(1 - x^2 - y^2)
  const double apex = std::sqrt(2.0 / 3.0);

  auto a_of = [&](double y) { return 1.0 / s3 - std::sqrt(1.0 - y * y); };
  auto c_of = [&](double y) { return -y / s3; };
  auto b_of = [&](double y) {
    return (1.0 / std::sqrt(6.0)) * (1.0 / std::sqrt(2.0) - std::sqrt(3.0 - 4.0 * y * y));
  };

  // Inner integral over x in [x0, x1] with the rim at a(y) <= x0; u = sqrt(x - a).
  auto inner = [&](double y, double x0, double x1, auto integrand) {
    const double a = a_of(y);
    const double u0 = std::sqrt(std::max(0.0, x0 - a));
    const double u1 = std::sqrt(std::max(0.0, x1 - a));
    auto h = [&](double u) { return integrand(a + u * u, y) * 2.0 * u; };
    return integrate(h, u0, u1, abs_tol * 0.02).value;
  };

  auto top_val = [&](double x, double y) { return area ? top.area_element(x, y) : top.f(x, y); };
  auto both_val = [&](double x, double y) {
    if (area) return top.area_element(x, y) + low.area_element(x, y);
    return top.f(x, y) - (apex - low.f(x, y));
  };

  if (!four) {
    auto outer = [&](double y) { return inner(y, a_of(y), c_of(y), top_val); };
    return 12.0 * integrate(outer, 0.0, 0.5, abs_tol * 0.25).value;
  }
  auto outer1 = [&](double y) { return inner(y, a_of(y), b_of(y), top_val); };
  auto outer2 = [&](double y) { return inner(y, b_of(y), c_of(y), both_val); };
  return 12.0 * integrate(outer1, 0.0, 0.5, abs_tol * 0.2).value +
         6.0 * integrate(outer2, 0.0, 0.5, abs_tol * 0.2).value;
}

double height_field(HeightFieldSolid solid, bool area, double abs_tol) {
  switch (solid) {
    case HeightFieldSolid::dihedron:
      return dihedron_integral(area, abs_tol);
    case HeightFieldSolid::trihedron:
      return three_four_integral(false, area, abs_tol);
    case HeightFieldSolid::tetrahedron:
      return three_four_integral(true, area, abs_tol);
  }
  throw std::domain_error("unknown solid");
}

}  // namespace

double height_field_volume(HeightFieldSolid solid, double abs_tol) {
  return height_field(solid, false, abs_tol);
}

double height_field_area(HeightFieldSolid solid, double abs_tol) {
  return height_field(solid, true, abs_tol);
}

// ---- divergence-theorem volume -------------------------------------------------------

namespace {

struct Halfspace {
  Vec3 u;     // unit direction from this sphere's center toward the other center
  double h;   // membership on the unit direction sphere: nu . u >= h
};

}  // namespace

double divergence_volume(const BallSet& set, double abs_tol) {
  const int n = static_cast<int>(set.size());
  if (n == 1) {
    const double r = set.balls[0].radius;
    return 4.0 / 3.0 * kPi * r * r * r;
  }

  double volume = 0.0;
  const double face_tol = abs_tol / (3.0 * n);

  for (int i = 0; i < n; ++i) {
    const Sphere& si = set.balls[i];
    const double r = si.radius;

    std::vector<Halfspace> cons;
    for (int k = 0; k < n; ++k) {
      if (k == i) continue;
      const Vec3 axis = set.balls[k].center - si.center;
      const double d = axis.norm();
      cons.push_back({axis / d,
                      (r * r + d * d - set.balls[k].radius * set.balls[k].radius) /
                          (2.0 * r * d)});
    }

    // Boundary arcs give the pole candidates and the azimuth split points.
    std::vector<Vec3> boundary_dirs;
    std::vector<Vec3> end_dirs;
    bool any_circle = false;
    for (int k = 0; k < n; ++k) {
      if (k == i) continue;
      PairIntersection pi = intersection_circle(si, set.balls[k], i, k);
      if (pi.kind != PairContact::circle) continue;
      any_circle = true;
      for (const AngularInterval& iv : clip_circle_by_balls(*pi.circle, set)) {
        const double mid = 0.5 * (iv.start + iv.end);
        boundary_dirs.push_back((pi.circle->point(mid) - si.center) / r);
        if (iv.width() < kTwoPi - 1e-9) {
          end_dirs.push_back((pi.circle->point(iv.start) - si.center) / r);
          end_dirs.push_back((pi.circle->point(iv.end) - si.center) / r);
        }
      }
    }
    if (boundary_dirs.empty()) {
      if (any_circle) continue;  // sphere is cut but owns no boundary patch
      // No crossing circle: the sphere is redundant unless it sits inside every other
      // ball, in which case it is the entire boundary and contributes 4 pi r^3.
      bool whole = true;
      for (int k = 0; k < n && whole; ++k) {
        if (k == i) continue;
        const double d = (set.balls[k].center - si.center).norm();
        whole = d + r <= set.balls[k].radius + 1e-12;
      }
      if (whole) volume += 4.0 * kPi * r * r * r;
      continue;
    }

    auto margin_of = [&](const Vec3& p) {
      double m = 1e300;
      for (const Halfspace& c : cons) m = std::min(m, p.dot(c.u) - c.h);
      return m;
    };
    std::vector<Vec3> cands;
    Vec3 mean{0, 0, 0};
    for (const Vec3& d : boundary_dirs) mean += d;
    for (const Vec3& d : end_dirs) mean += d;
    if (mean.norm() > 1e-9) cands.push_back(mean.normalized());
    Vec3 su{0, 0, 0};
    for (const Halfspace& c : cons) su += c.u;
    if (su.norm() > 1e-9) cands.push_back(su.normalized());
    for (const Halfspace& c : cons) cands.push_back(c.u);
    Vec3 pole = cands.front();
    for (const Vec3& c : cands)
      if (margin_of(c) > margin_of(pole)) pole = c;
    if (margin_of(pole) <= 1e-9)
      throw std::runtime_error("no interior pole found for face patch");

    Vec3 E1raw = std::abs(pole.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
    const Vec3 E1 = (E1raw - pole * E1raw.dot(pole)).normalized();
    const Vec3 E2 = pole.cross(E1);

    // First crossing of each constraint along the meridian at azimuth phi.
    auto theta_max = [&](double phi) {
      const double ca = std::cos(phi), sa = std::sin(phi);
      double tm = kPi;
      for (const Halfspace& c : cons) {
        const double A = pole.dot(c.u);
        const double B = ca * E1.dot(c.u) + sa * E2.dot(c.u);
        const double C = std::hypot(A, B);
        if (C < 1e-15) continue;
        const double x = c.h / C;
        if (x <= -1.0) continue;
        if (x >= 1.0) return 0.0;
        tm = std::min(tm, std::atan2(B, A) + std::acos(x));
      }
      return tm;
    };

    // x . n = r + nu . center splits into cos/sin multiples with exact theta integrals.
    const double cp = si.center.dot(pole);
    auto azimuth_integrand = [&](double phi) {
      const double T = theta_max(phi);
      const double d = std::cos(phi) * E1.dot(si.center) + std::sin(phi) * E2.dot(si.center);
      const double sT = std::sin(T), cT = std::cos(T);
      return r * r *
             (r * (1.0 - cT) + cp * sT * sT / 2.0 + d * (T - sT * cT) / 2.0);
    };

    std::set<double> split_set{0.0, kTwoPi};
    for (const Vec3& v : end_dirs) {
      double az = std::atan2(v.dot(E2), v.dot(E1));
      if (az < 0.0) az += kTwoPi;
      split_set.insert(az);
    }
    std::vector<double> splits(split_set.begin(), split_set.end());

    double face_int = 0.0;
    for (size_t s = 0; s + 1 < splits.size(); ++s)
      face_int += integrate(azimuth_integrand, splits[s], splits[s + 1],
                            face_tol / static_cast<double>(splits.size()))
                      .value;
    volume += face_int;
  }
  return volume / 3.0;
}

}  // namespace ballm
