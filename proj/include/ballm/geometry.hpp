// Basic vector/sphere types and ball-set construction for intersections of balls.
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace ballm {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm2() const { return dot(*this); }
  double norm() const { return std::sqrt(norm2()); }
  Vec3 normalized() const;
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }
inline double dot(const Vec3& a, const Vec3& b) { return a.dot(b); }
inline Vec3 cross(const Vec3& a, const Vec3& b) { return a.cross(b); }

inline Vec3 Vec3::normalized() const {
  double n = norm();
  if (n == 0.0) throw std::domain_error("cannot normalize zero vector");
  return *this / n;
}

// Unit vector; construction checks |norm - 1| <= 1e-12.
class Direction {
 public:
  explicit Direction(const Vec3& v) : v_(v) {
    if (std::abs(v.norm() - 1.0) > 1e-12)
      throw std::domain_error("Direction requires a unit vector (|norm - 1| <= 1e-12)");
  }
  static Direction of(const Vec3& v) { return Direction(v.normalized()); }
  const Vec3& vec() const { return v_; }

 private:
  Vec3 v_;
};

struct Sphere {
  Vec3 center;
  double radius;

  Sphere(const Vec3& c, double r) : center(c), radius(r) {
    if (!(r > 0.0) || !std::isfinite(r))
      throw std::domain_error("Sphere radius must be positive and finite");
    if (!std::isfinite(c.x) || !std::isfinite(c.y) || !std::isfinite(c.z))
      throw std::domain_error("Sphere center must be finite");
  }
};

// Volume, surface area, and mean width of a convex body.
// Mean width of the unit ball is 2 (average of h(u) + h(-u) over directions).
struct Measures {
  double volume = 0.0;
  double surface_area = 0.0;
  double mean_width = 0.0;
};

// Non-empty list of spheres defining the body that is the intersection of the closed balls.
struct BallSet {
  std::vector<Sphere> balls;

  explicit BallSet(std::vector<Sphere> b) : balls(std::move(b)) {
    if (balls.empty()) throw std::domain_error("BallSet must contain at least one sphere");
    for (size_t i = 0; i < balls.size(); ++i)
      for (size_t j = i + 1; j < balls.size(); ++j) {
        const Sphere &a = balls[i], &c = balls[j];
        if (a.center.x == c.center.x && a.center.y == c.center.y && a.center.z == c.center.z &&
            a.radius == c.radius)
          throw std::domain_error("BallSet must not contain two identical spheres");
      }
  }
  size_t size() const { return balls.size(); }
};

// Closed-set membership: inside every ball with absolute slack on each radius.
bool point_in_ballset(const Vec3& p, const BallSet& set, double slack = 1e-12);

// Uniform scaling about the origin; s must be positive.
BallSet scale_ballset(const BallSet& set, double s);

// Canonical unit-sphere configurations. All constants are computed at runtime.
BallSet dihedron_balls();               // two spheres, centers (+-1/2, 0, 0)
BallSet lens_balls(double delta);       // two spheres, centers (+-delta/2, 0, 0)
BallSet trihedron_balls();              // three mutually unit-distance centers in the xy-plane
BallSet tetrahedron_balls();            // trihedron plus apex (0, 0, sqrt(2/3))
BallSet hexahedron_balls();             // six spheres at +-1/sqrt(2) on each axis
BallSet dodecahedron_balls();           // twelve spheres at icosahedron vertex directions

// Dispatch by name: dihedron, trihedron, tetrahedron, hexahedron, dodecahedron.
// Unknown names raise std::invalid_argument.
BallSet canonical_ballsets(const std::string& name);

}  // namespace ballm
