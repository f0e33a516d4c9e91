#include "ballm/geometry.hpp"

namespace ballm {

bool point_in_ballset(const Vec3& p, const BallSet& set, double slack) {
  for (const Sphere& s : set.balls) {
    if ((p - s.center).norm() > s.radius + slack) return false;
  }
  return true;
}

BallSet scale_ballset(const BallSet& set, double s) {
  if (!(s > 0.0) || !std::isfinite(s))
    throw std::domain_error("scale factor must be positive and finite");
  std::vector<Sphere> out;
  out.reserve(set.size());
  for (const Sphere& b : set.balls) out.emplace_back(b.center * s, b.radius * s);
  return BallSet(std::move(out));
}

BallSet dihedron_balls() { return lens_balls(1.0); }

BallSet lens_balls(double delta) {
  if (!(delta > 0.0) || !(delta < 2.0))
    throw std::domain_error("lens center distance must lie in (0, 2)");
  return BallSet({Sphere({-delta / 2.0, 0.0, 0.0}, 1.0), Sphere({delta / 2.0, 0.0, 0.0}, 1.0)});
}

BallSet trihedron_balls() {
  const double s3 = std::sqrt(3.0);
  return BallSet({Sphere({1.0 / s3, 0.0, 0.0}, 1.0),
                  Sphere({-1.0 / (2.0 * s3), 0.5, 0.0}, 1.0),
                  Sphere({-1.0 / (2.0 * s3), -0.5, 0.0}, 1.0)});
}

BallSet tetrahedron_balls() {
  const double s3 = std::sqrt(3.0);
  return BallSet({Sphere({1.0 / s3, 0.0, 0.0}, 1.0),
                  Sphere({-1.0 / (2.0 * s3), 0.5, 0.0}, 1.0),
                  Sphere({-1.0 / (2.0 * s3), -0.5, 0.0}, 1.0),
                  Sphere({0.0, 0.0, std::sqrt(2.0 / 3.0)}, 1.0)});
}

BallSet hexahedron_balls() {
  const double c = 1.0 / std::sqrt(2.0);
  return BallSet({Sphere({c, 0.0, 0.0}, 1.0), Sphere({-c, 0.0, 0.0}, 1.0),
                  Sphere({0.0, c, 0.0}, 1.0), Sphere({0.0, -c, 0.0}, 1.0),
                  Sphere({0.0, 0.0, c}, 1.0), Sphere({0.0, 0.0, -c}, 1.0)});
}

BallSet dodecahedron_balls() {
  // Icosahedron vertices (0, +-1, +-g), (+-1, +-g, 0), (+-g, 0, +-1) have edge length 2;
  // halving puts adjacent centers at distance 1, matching the other canonical solids.
  const double g = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Sphere> balls;
  for (double s1 : {1.0, -1.0})
    for (double s2 : {1.0, -1.0}) {
      balls.emplace_back(Vec3{0.0, s1, s2 * g} / 2.0, 1.0);
      balls.emplace_back(Vec3{s1, s2 * g, 0.0} / 2.0, 1.0);
      balls.emplace_back(Vec3{s1 * g, 0.0, s2} / 2.0, 1.0);
    }
  return BallSet(std::move(balls));
}

BallSet canonical_ballsets(const std::string& name) {
  if (name == "dihedron") return dihedron_balls();
  if (name == "trihedron") return trihedron_balls();
  if (name == "tetrahedron") return tetrahedron_balls();
  if (name == "hexahedron") return hexahedron_balls();
  if (name == "dodecahedron") return dodecahedron_balls();
  throw std::invalid_argument(
      "unknown canonical solid \"" + name +
      "\"; expected dihedron, trihedron, tetrahedron, hexahedron, or dodecahedron");
}

}  // namespace ballm
