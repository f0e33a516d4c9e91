// Convex body abstraction shared by the Monte Carlo estimators: membership, bounding
// box, support function, and exact-area boundary patches with uniform samplers. Covers
// ball intersections plus the three rotational comparison bodies.
#pragma once

#include <functional>
#include <memory>

#include "ballm/montecarlo.hpp"

namespace ballm {

struct Aabb {
  Vec3 lo, hi;
  bool empty() const { return lo.x >= hi.x || lo.y >= hi.y || lo.z >= hi.z; }
  double volume() const {
    return empty() ? 0.0 : (hi.x - lo.x) * (hi.y - lo.y) * (hi.z - lo.z);
  }
};

class ConvexBody {
 public:
  virtual ~ConvexBody() = default;
  virtual bool contains(const Vec3& p) const = 0;
  virtual Aabb bounds() const = 0;
  virtual double support(const Vec3& unit_dir) const = 0;

  // One patch per boundary component of known exact area. `sample` maps two uniform
  // deviates to a point of the carrier surface; `counts` decides whether that carrier
  // point belongs to the body boundary (e.g. a sphere point not inside other balls).
  struct BoundaryPatch {
    double area = 0.0;
    std::function<Vec3(double, double, rng::SplitMix64&)> sample;
    std::function<bool(const Vec3&)> counts;
  };
  virtual std::vector<BoundaryPatch> boundary() const = 0;
};

// Intersection of balls; support via Dykstra projection.
class BallIntersectionBody : public ConvexBody {
 public:
  explicit BallIntersectionBody(BallSet set) : set_(std::move(set)) {}
  bool contains(const Vec3& p) const override;
  Aabb bounds() const override;
  double support(const Vec3& u) const override;
  std::vector<BoundaryPatch> boundary() const override;
  const BallSet& set() const { return set_; }

 private:
  BallSet set_;
};

// Unit-radius hemispherical caps on a length-ell cylinder about the z-axis.
class CappedCylinderBody : public ConvexBody {
 public:
  explicit CappedCylinderBody(double ell);
  bool contains(const Vec3& p) const override;
  Aabb bounds() const override;
  double support(const Vec3& u) const override;
  std::vector<BoundaryPatch> boundary() const override;

 private:
  double ell_;
};

// Unit ball cut by the planes z = +-cos(phi).
class SymmetricSegmentBody : public ConvexBody {
 public:
  explicit SymmetricSegmentBody(double phi);
  bool contains(const Vec3& p) const override;
  Aabb bounds() const override;
  double support(const Vec3& u) const override;
  std::vector<BoundaryPatch> boundary() const override;

 private:
  double c_, s_;
};

// Convex hull of the unit ball and the points (0, 0, +-1/cos(phi)); phi < pi/2.
class CapBodyHull : public ConvexBody {
 public:
  explicit CapBodyHull(double phi);
  bool contains(const Vec3& p) const override;
  Aabb bounds() const override;
  double support(const Vec3& u) const override;
  std::vector<BoundaryPatch> boundary() const override;

 private:
  double c_, s_, apex_;
};

// Generic estimators over any ConvexBody; the BallSet functions in montecarlo.hpp are
// these applied to BallIntersectionBody.
Estimate mc_volume_body(const ConvexBody& body, const McConfig& cfg = {},
                        int max_workers = 0);
// n_samples per boundary patch; patch estimates and errors combine by independence.
Estimate mc_area_body(const ConvexBody& body, const McConfig& cfg = {},
                      int max_workers = 0);
Estimate mc_mean_width_body(const ConvexBody& body, std::int64_t n_dirs,
                            std::uint64_t seed, int max_workers = 0);

}  // namespace ballm
