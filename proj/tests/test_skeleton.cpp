// Boundary skeleton: pairwise circles, clipped edge arcs, Gauss-Bonnet face areas,
// vertices, and the curvature-based mean width.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <set>

#include "ballm/exact.hpp"
#include "ballm/skeleton.hpp"

using namespace ballm;

namespace {
constexpr double kPi = std::numbers::pi;
const double kArcsec3 = std::acos(1.0 / 3.0);

double face_area_sum(const BallSet& set) {
  double s = 0.0;
  for (const FacePatch& f : face_areas(set)) s += f.area;
  return s;
}
}  // namespace

TEST_CASE("pairwise intersection circle of the two-ball solid") {
  const BallSet set = dihedron_balls();
  const PairIntersection pi = intersection_circle(set.balls[0], set.balls[1], 0, 1);
  REQUIRE(pi.kind == PairContact::circle);
  const IntersectionCircle& c = *pi.circle;
  CHECK(c.center.norm() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(c.radius == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-14));
  // normal points from ball 0 toward ball 1 (+x)
  CHECK(c.normal.x == doctest::Approx(1.0).epsilon(1e-14));
  // frame is right-handed and orthonormal
  CHECK(dot(c.e1, c.e2) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(dot(cross(c.e1, c.e2), c.normal) == doctest::Approx(1.0).epsilon(1e-14));
  // points of the circle lie on both sphere surfaces
  for (double t : {0.0, 1.0, 2.5, 4.0}) {
    const Vec3 p = c.point(t);
    CHECK((p - set.balls[0].center).norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK((p - set.balls[1].center).norm() == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("pair contact classification") {
  const Sphere a({0.0, 0.0, 0.0}, 1.0);
  CHECK(intersection_circle(a, Sphere({3.0, 0.0, 0.0}, 1.0)).kind == PairContact::none);
  CHECK(intersection_circle(a, Sphere({2.0, 0.0, 0.0}, 1.0)).kind ==
        PairContact::tangent_point);
  const PairIntersection t = intersection_circle(a, Sphere({2.0, 0.0, 0.0}, 1.0));
  CHECK((*t.point - Vec3{1.0, 0.0, 0.0}).norm() == doctest::Approx(0.0).epsilon(1e-12));
  // one ball nested strictly inside the other: no surface contact
  CHECK(intersection_circle(a, Sphere({0.1, 0.0, 0.0}, 3.0)).kind == PairContact::none);
  CHECK_THROWS_AS(intersection_circle(a, Sphere({0.0, 0.0, 0.0}, 2.0)),
                  std::domain_error);
}

TEST_CASE("exterior dihedral angle for unit spheres at distance delta") {
  for (double delta : {0.3, 1.0, 1.4, 1.9}) {
    const Sphere a({0.0, 0.0, 0.0}, 1.0), b({delta, 0.0, 0.0}, 1.0);
    CHECK(exterior_dihedral_angle(a, b) ==
          doctest::Approx(std::acos(1.0 - delta * delta / 2.0)).epsilon(1e-13));
  }
  // direct normal-angle evaluation at points of the shared circle
  const Sphere a({-0.7, 0.0, 0.0}, 1.0), b({0.7, 0.0, 0.0}, 1.0);
  const PairIntersection pi = intersection_circle(a, b, 0, 1);
  REQUIRE(pi.kind == PairContact::circle);
  const double alpha = exterior_dihedral_angle(a, b);
  for (double t : {0.3, 2.1, 3.9, 5.5, 6.1}) {
    const Vec3 p = pi.circle->point(t);
    const double direct =
        std::acos(dot((p - a.center).normalized(), (p - b.center).normalized()));
    CHECK(direct == doctest::Approx(alpha).epsilon(1e-9));
  }
}

TEST_CASE("edge counts across the canonical solids") {
  CHECK(edge_arcs(dihedron_balls()).size() == 1);
  CHECK(edge_arcs(trihedron_balls()).size() == 3);
  CHECK(edge_arcs(tetrahedron_balls()).size() == 6);
  CHECK(edge_arcs(hexahedron_balls()).size() == 12);
  CHECK(edge_arcs(dodecahedron_balls()).size() == 30);
}

TEST_CASE("vertex counts and on-surface residuals") {
  CHECK(body_vertices(dihedron_balls()).empty());
  CHECK(body_vertices(trihedron_balls()).size() == 2);
  CHECK(body_vertices(tetrahedron_balls()).size() == 4);
  CHECK(body_vertices(hexahedron_balls()).size() == 8);
  CHECK(body_vertices(dodecahedron_balls()).size() == 20);
  for (const BallSet& set : {trihedron_balls(), tetrahedron_balls(),
                             hexahedron_balls(), dodecahedron_balls()}) {
    for (const Vertex& v : body_vertices(set)) {
      CHECK(v.spheres.size() >= 3);
      for (int k : v.spheres)
        CHECK(std::abs((v.position - set.balls[k].center).norm() -
                       set.balls[k].radius) <= 1e-10);
    }
  }
  // the three-ball solid's two vertices sit on the symmetry axis
  const auto tri = body_vertices(trihedron_balls());
  const double zv = std::sqrt(2.0 / 3.0);
  CHECK(std::abs(std::abs(tri[0].position.z) - zv) <= 1e-10);
  CHECK(std::abs(std::abs(tri[1].position.z) - zv) <= 1e-10);
  CHECK(tri[0].position.z * tri[1].position.z < 0.0);
}

TEST_CASE("edge arcs of the three- and four-ball solids") {
  // three balls: each of the 3 circles keeps an arc of angular width 2 arcsec(3)
  for (const EdgeArc& e : edge_arcs(trihedron_balls())) {
    CHECK(e.circle.radius == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));
    CHECK(e.interval.width() == doctest::Approx(2.0 * kArcsec3).epsilon(1e-10));
    CHECK(e.arc_length ==
          doctest::Approx(std::sqrt(3.0) * kArcsec3).epsilon(1e-10));
    CHECK(e.exterior_angle == doctest::Approx(kPi / 3.0).epsilon(1e-12));
  }
  // four balls: each of the 6 circles keeps an arc of angular width arcsec(3)
  for (const EdgeArc& e : edge_arcs(tetrahedron_balls())) {
    CHECK(e.interval.width() == doctest::Approx(kArcsec3).epsilon(1e-10));
    CHECK(e.arc_length ==
          doctest::Approx(std::sqrt(3.0) / 2.0 * kArcsec3).epsilon(1e-10));
    CHECK(e.exterior_angle == doctest::Approx(kPi / 3.0).epsilon(1e-12));
  }
  // arc endpoints land on vertices of the body
  const BallSet tet = tetrahedron_balls();
  const auto verts = body_vertices(tet);
  for (const EdgeArc& e : edge_arcs(tet)) {
    for (double t : {e.interval.start, e.interval.end}) {
      double nearest = 1e300;
      for (const Vertex& v : verts)
        nearest = std::min(nearest, (e.circle.point(t) - v.position).norm());
      CHECK(nearest <= 1e-8);
    }
  }
}

TEST_CASE("single ball: one full face, no edges") {
  const BallSet ball(std::vector<Sphere>{Sphere({0.3, -0.2, 0.9}, 2.0)});
  CHECK(edge_arcs(ball).empty());
  const auto faces = face_areas(ball);
  REQUIRE(faces.size() == 1);
  CHECK(faces[0].area == doctest::Approx(16.0 * kPi).epsilon(1e-13));
  CHECK(faces[0].curvature_radius == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(indirect_mean_width(faces, edge_arcs(ball)) ==
        doctest::Approx(4.0).epsilon(1e-13));
}

TEST_CASE("face areas against closed-form surface areas") {
  CHECK(face_area_sum(dihedron_balls()) ==
        doctest::Approx(dihedron_measures().surface_area).epsilon(1e-12));
  CHECK(face_area_sum(trihedron_balls()) ==
        doctest::Approx(trihedron_measures().surface_area).epsilon(1e-12));
  CHECK(face_area_sum(tetrahedron_balls()) ==
        doctest::Approx(reuleaux_tetrahedron_measures().surface_area).epsilon(1e-12));
  // four-ball solid: each of the four faces carries area (4 pi - 9 arcsec 3) / 2
  for (const FacePatch& f : face_areas(tetrahedron_balls()))
    CHECK(f.area ==
          doctest::Approx((4.0 * kPi - 9.0 * kArcsec3) / 2.0).epsilon(1e-11));
}

TEST_CASE("curvature-based mean width against closed forms") {
  const auto mw = [](const BallSet& s) {
    return indirect_mean_width(face_areas(s), edge_arcs(s));
  };
  CHECK(mw(dihedron_balls()) ==
        doctest::Approx(dihedron_measures().mean_width).epsilon(1e-12));
  CHECK(mw(trihedron_balls()) ==
        doctest::Approx(trihedron_measures().mean_width).epsilon(1e-12));
  CHECK(mw(tetrahedron_balls()) ==
        doctest::Approx(reuleaux_tetrahedron_measures().mean_width).epsilon(1e-12));
}

TEST_CASE("two-ball family at several separations") {
  for (double phi : {0.3, kPi / 4.0, 1.1, 1.5}) {
    const double delta = 2.0 * std::cos(phi);
    const BallSet set = lens_balls(delta);
    const Measures closed = lens_measures(AngularRadius(phi));
    CHECK(face_area_sum(set) == doctest::Approx(closed.surface_area).epsilon(1e-11));
    CHECK(indirect_mean_width(face_areas(set), edge_arcs(set)) ==
          doctest::Approx(closed.mean_width).epsilon(1e-11));
    const auto edges = edge_arcs(set);
    REQUIRE(edges.size() == 1);
    CHECK(edges[0].arc_length ==
          doctest::Approx(2.0 * kPi * std::sin(phi)).epsilon(1e-11));
  }
}

TEST_CASE("nested ball shadows a face completely") {
  // a large ball containing the whole two-ball solid contributes no boundary
  const BallSet set(std::vector<Sphere>{Sphere({-0.5, 0.0, 0.0}, 1.0),
                                        Sphere({0.5, 0.0, 0.0}, 1.0),
                                        Sphere({0.0, 0.0, 0.0}, 5.0)});
  const auto faces = face_areas(set);
  double big_ball_area = 0.0, small_sum = 0.0;
  for (const FacePatch& f : faces)
    (f.sphere_index == 2 ? big_ball_area : small_sum) += f.area;
  CHECK(big_ball_area == 0.0);
  CHECK(small_sum == doctest::Approx(dihedron_measures().surface_area).epsilon(1e-12));
  CHECK(indirect_mean_width(faces, edge_arcs(set)) ==
        doctest::Approx(dihedron_measures().mean_width).epsilon(1e-11));
}

TEST_CASE("six-ball solid: edge angles and vertex adjacency") {
  const BallSet hex = hexahedron_balls();
  const auto edges = edge_arcs(hex);
  REQUIRE(edges.size() == 12);
  for (const EdgeArc& e : edges) {
    // adjacent centers sit at distance 1, so every exterior angle is pi/3
    CHECK(e.exterior_angle == doctest::Approx(kPi / 3.0).epsilon(1e-12));
    CHECK(e.arc_length > 0.0);
  }
  // every vertex joins exactly 3 spheres, and each sphere carries one face
  const auto faces = face_areas(hex);
  int nonempty = 0;
  for (const FacePatch& f : faces) nonempty += f.area > 0.0 ? 1 : 0;
  CHECK(nonempty == 6);
}
