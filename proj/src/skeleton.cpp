#include "ballm/skeleton.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ballm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kAngleTol = 1e-10;   // near-tangency slivers below this are dropped
constexpr double kVertexTol = 1e-8;   // endpoint matching distance

void circle_frame(const Vec3& n, Vec3& e1, Vec3& e2) {
  Vec3 raw = Vec3{0.0, 0.0, 1.0} - n * n.z;
  if (raw.norm() < 1e-8) raw = Vec3{1.0, 0.0, 0.0} - n * n.x;
  e1 = raw.normalized();
  e2 = n.cross(e1);
}

// Intersects a sorted disjoint list of [a, b] subintervals of [0, 2pi] with a single
// arc given as [lo, lo + w] on the circle (w <= 2pi), splitting the wrap at 0.
std::vector<AngularInterval> intersect_with_arc(const std::vector<AngularInterval>& segs,
                                                double lo, double w) {
  lo = std::fmod(lo, kTwoPi);
  if (lo < 0.0) lo += kTwoPi;
  const double hi = lo + w;
  std::vector<AngularInterval> pieces{{lo, std::min(hi, kTwoPi)}};
  if (hi > kTwoPi) pieces.push_back({0.0, hi - kTwoPi});

  std::vector<AngularInterval> out;
  for (const AngularInterval& s : segs)
    for (const AngularInterval& p : pieces) {
      const double a = std::max(s.start, p.start);
      const double b = std::min(s.end, p.end);
      if (b - a > kAngleTol) out.push_back({a, b});
    }
  std::sort(out.begin(), out.end(),
            [](const AngularInterval& x, const AngularInterval& y) { return x.start < y.start; });
  return out;
}

}  // namespace

PairIntersection intersection_circle(const Sphere& a, const Sphere& b, int i, int j) {
  const Vec3 axis = b.center - a.center;
  const double d = axis.norm();
  if (d == 0.0) throw std::domain_error("coincident sphere centers have no radical plane");

  PairIntersection out;
  const double sum = a.radius + b.radius;
  const double diff = std::abs(a.radius - b.radius);
  if (d > sum || d < diff) return out;  // kind = none

  if (d == sum || d == diff) {
    out.kind = PairContact::tangent_point;
    const double t = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
    out.point = a.center + axis * (t / d);
    return out;
  }

  IntersectionCircle c;
  c.normal = axis / d;
  const double t = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
  c.center = a.center + c.normal * t;
  c.radius = std::sqrt(std::max(0.0, a.radius * a.radius - t * t));
  circle_frame(c.normal, c.e1, c.e2);
  c.i = i;
  c.j = j;
  out.kind = PairContact::circle;
  out.circle = c;
  return out;
}

double exterior_dihedral_angle(const Sphere& a, const Sphere& b) {
  const double d2 = (b.center - a.center).norm2();
  const double c = (a.radius * a.radius + b.radius * b.radius - d2) /
                   (2.0 * a.radius * b.radius);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

std::vector<AngularInterval> clip_circle_by_balls(const IntersectionCircle& c,
                                                  const BallSet& set) {
  std::vector<AngularInterval> segs{{0.0, kTwoPi}};
  for (int k = 0; k < static_cast<int>(set.size()); ++k) {
    if (k == c.i || k == c.j) continue;
    const Sphere& ball = set.balls[k];
    const Vec3 q = ball.center - c.center;
    const double A = q.dot(c.e1);
    const double B = q.dot(c.e2);
    const double rho = std::hypot(A, B);
    const double gap = c.radius * c.radius + q.norm2() - ball.radius * ball.radius;
    if (rho < 1e-14) {
      if (gap <= 0.0) continue;  // whole circle inside this ball
      return {};
    }
    const double t = gap / (2.0 * c.radius * rho);
    if (t <= -1.0) continue;
    if (t >= 1.0) return {};
    const double w = std::acos(t);
    segs = intersect_with_arc(segs, std::atan2(B, A) - w, 2.0 * w);
    if (segs.empty()) return {};
  }

  // Rejoin a pair split across 0 into a single wrapped interval.
  if (segs.size() >= 2 && segs.front().start <= kAngleTol &&
      segs.back().end >= kTwoPi - kAngleTol &&
      segs.front().width() + segs.back().width() < kTwoPi - kAngleTol) {
    AngularInterval merged{segs.back().start, segs.back().end + segs.front().width()};
    segs.erase(segs.begin());
    segs.back() = merged;
  }
  if (segs.size() == 1 && segs.front().width() >= kTwoPi - kAngleTol)
    segs.front() = {0.0, kTwoPi};
  return segs;
}

std::vector<EdgeArc> edge_arcs(const BallSet& set) {
  std::vector<EdgeArc> out;
  const int n = static_cast<int>(set.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      PairIntersection pi = intersection_circle(set.balls[i], set.balls[j], i, j);
      if (pi.kind != PairContact::circle) continue;
      const double alpha = exterior_dihedral_angle(set.balls[i], set.balls[j]);
      for (const AngularInterval& iv : clip_circle_by_balls(*pi.circle, set)) {
        EdgeArc e;
        e.circle = *pi.circle;
        e.interval = iv;
        e.arc_length = pi.circle->radius * iv.width();
        e.exterior_angle = alpha;
        out.push_back(e);
      }
    }
  return out;
}

namespace {

struct FaceArc {
  IntersectionCircle circle;
  AngularInterval interval;
  double cos_rho = 0.0;  // signed axial offset of the circle plane over the sphere radius
};

// Arcs bounding the patch of sphere `i` that lies inside all other balls, each circle
// oriented with its normal from sphere i outward toward the partner sphere so that
// increasing angle keeps the patch on the left (seen from outside sphere i).
std::vector<FaceArc> face_boundary(const BallSet& set, int i) {
  std::vector<FaceArc> arcs;
  const Sphere& si = set.balls[i];
  for (int k = 0; k < static_cast<int>(set.size()); ++k) {
    if (k == i) continue;
    PairIntersection pi = intersection_circle(si, set.balls[k], i, k);
    if (pi.kind != PairContact::circle) continue;
    const double t = (pi.circle->center - si.center).dot(pi.circle->normal);
    for (const AngularInterval& iv : clip_circle_by_balls(*pi.circle, set))
      arcs.push_back({*pi.circle, iv, t / si.radius});
  }
  return arcs;
}

}  // namespace

std::vector<FacePatch> face_areas(const BallSet& set) {
  std::vector<FacePatch> out;
  for (int i = 0; i < static_cast<int>(set.size()); ++i) {
    const Sphere& si = set.balls[i];
    std::vector<FaceArc> arcs = face_boundary(set, i);
    FacePatch patch{i, 0.0, si.radius};

    if (arcs.empty()) {
      // No boundary arc on this sphere: it contributes its whole surface when it lies
      // inside every other ball, and nothing otherwise (redundant constraint).
      bool whole = true;
      for (int k = 0; k < static_cast<int>(set.size()) && whole; ++k) {
        if (k == i) continue;
        const double d = (set.balls[k].center - si.center).norm();
        whole = d + si.radius <= set.balls[k].radius + 1e-12;
      }
      patch.area = whole ? 4.0 * kPi * si.radius * si.radius : 0.0;
      out.push_back(patch);
      continue;
    }

    std::vector<bool> used(arcs.size(), false);
    double total = 0.0;
    int loops = 0;
    for (size_t s = 0; s < arcs.size(); ++s) {
      if (used[s]) continue;
      ++loops;
      size_t cur = s;
      const Vec3 start_pt = arcs[s].circle.point(arcs[s].interval.start);
      while (true) {
        used[cur] = true;
        const FaceArc& a = arcs[cur];
        total += a.interval.width() * a.cos_rho;
        if (a.interval.width() >= kTwoPi - kAngleTol) break;  // closed circle loop

        const Vec3 endp = a.circle.point(a.interval.end);
        size_t next = arcs.size();
        for (size_t m = 0; m < arcs.size(); ++m) {
          if (used[m]) continue;
          if ((arcs[m].circle.point(arcs[m].interval.start) - endp).norm() < kVertexTol) {
            next = m;
            break;
          }
        }
        const bool closing = next == arcs.size();
        if (closing && (endp - start_pt).norm() >= kVertexTol)
          throw std::runtime_error("open boundary chain on sphere patch");

        const Vec3 ta = a.circle.tangent(a.interval.end);
        const FaceArc& b = closing ? arcs[s] : arcs[next];
        const Vec3 tb = b.circle.tangent(b.interval.start);
        const Vec3 nu = (endp - si.center) / si.radius;
        total += std::atan2(ta.cross(tb).dot(nu), ta.dot(tb));
        if (closing) break;
        cur = next;
      }
    }
    patch.area = si.radius * si.radius * (kTwoPi * (2 - loops) - total);
    out.push_back(patch);
  }
  return out;
}

std::vector<Vertex> body_vertices(const BallSet& set) {
  std::vector<Vertex> verts;
  for (const EdgeArc& e : edge_arcs(set)) {
    if (e.interval.width() >= kTwoPi - kAngleTol) continue;
    for (double theta : {e.interval.start, e.interval.end}) {
      const Vec3 p = e.circle.point(theta);
      Vertex* match = nullptr;
      for (Vertex& v : verts)
        if ((v.position - p).norm() < kVertexTol) {
          match = &v;
          break;
        }
      if (!match) {
        verts.push_back({p, {}});
        match = &verts.back();
      }
      for (int idx : {e.circle.i, e.circle.j})
        if (std::find(match->spheres.begin(), match->spheres.end(), idx) ==
            match->spheres.end())
          match->spheres.push_back(idx);
    }
  }
  for (Vertex& v : verts) std::sort(v.spheres.begin(), v.spheres.end());
  return verts;
}

double indirect_mean_width(const std::vector<FacePatch>& faces,
                           const std::vector<EdgeArc>& edges) {
  double face_term = 0.0;
  for (const FacePatch& f : faces) face_term += f.area / f.curvature_radius;
  double edge_term = 0.0;
  for (const EdgeArc& e : edges) edge_term += e.exterior_angle * e.arc_length;
  return face_term / (2.0 * kPi) + edge_term / (4.0 * kPi);
}

}  // namespace ballm
