#include "ballm/bodies.hpp"

#include <cmath>
#include <numbers>

namespace ballm {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void validate(const McConfig& cfg) {
  if (cfg.n_samples <= 0) throw std::domain_error("n_samples must be positive");
  if (cfg.n_chunks <= 0) throw std::domain_error("n_chunks must be positive");
}
}  // namespace

// ---- ball intersection ----------------------------------------------------------------

bool BallIntersectionBody::contains(const Vec3& p) const {
  return point_in_ballset(p, set_);
}

Aabb BallIntersectionBody::bounds() const {
  Aabb box{{-1e300, -1e300, -1e300}, {1e300, 1e300, 1e300}};
  for (const Sphere& s : set_.balls) {
    box.lo.x = std::max(box.lo.x, s.center.x - s.radius);
    box.lo.y = std::max(box.lo.y, s.center.y - s.radius);
    box.lo.z = std::max(box.lo.z, s.center.z - s.radius);
    box.hi.x = std::min(box.hi.x, s.center.x + s.radius);
    box.hi.y = std::min(box.hi.y, s.center.y + s.radius);
    box.hi.z = std::min(box.hi.z, s.center.z + s.radius);
  }
  return box;
}

double BallIntersectionBody::support(const Vec3& u) const {
  return support_function(set_, Direction(u));
}

std::vector<ConvexBody::BoundaryPatch> BallIntersectionBody::boundary() const {
  std::vector<BoundaryPatch> parts;
  for (size_t i = 0; i < set_.size(); ++i) {
    const Sphere s = set_.balls[i];
    const BallSet* all = &set_;
    parts.push_back(
        {4.0 * kPi * s.radius * s.radius,
         [s](double, double, rng::SplitMix64& g) {
           return s.center + g.unit_vector() * s.radius;
         },
         [all, i](const Vec3& p) {
           for (size_t k = 0; k < all->size(); ++k) {
             if (k == i) continue;
             const Sphere& o = all->balls[k];
             if ((p - o.center).norm() >= o.radius) return false;  // not strictly inside
           }
           return true;
         }});
  }
  return parts;
}

// ---- capped cylinder -------------------------------------------------------------------

CappedCylinderBody::CappedCylinderBody(double ell) : ell_(ell) {
  if (!(ell >= 0.0) || !std::isfinite(ell))
    throw std::domain_error("cylinder length must be >= 0 and finite");
}

bool CappedCylinderBody::contains(const Vec3& p) const {
  const double half = ell_ / 2.0;
  if (std::abs(p.z) <= half) return p.x * p.x + p.y * p.y <= 1.0;
  const double dz = std::abs(p.z) - half;
  return p.x * p.x + p.y * p.y + dz * dz <= 1.0;
}

Aabb CappedCylinderBody::bounds() const {
  const double zmax = ell_ / 2.0 + 1.0;
  return {{-1.0, -1.0, -zmax}, {1.0, 1.0, zmax}};
}

double CappedCylinderBody::support(const Vec3& u) const {
  return 1.0 + ell_ / 2.0 * std::abs(u.z);
}

std::vector<ConvexBody::BoundaryPatch> CappedCylinderBody::boundary() const {
  const double half = ell_ / 2.0;
  std::vector<BoundaryPatch> parts;
  for (double sz : {1.0, -1.0}) {
    const Vec3 c{0.0, 0.0, sz * half};
    parts.push_back({4.0 * kPi,
                     [c](double, double, rng::SplitMix64& g) {
                       return c + g.unit_vector();
                     },
                     // Exactly the outward hemisphere of this cap sphere lies on the
                     // hull; the inward one sits inside the cylinder section (or the
                     // opposite ball when the length is short).
                     [half, sz](const Vec3& p) { return sz * p.z >= half; }});
  }
  if (ell_ > 0.0)
    parts.push_back({kTwoPi * ell_,
                     [half](double u1, double u2, rng::SplitMix64&) {
                       const double th = kTwoPi * u1;
                       return Vec3{std::cos(th), std::sin(th), half * (2.0 * u2 - 1.0)};
                     },
                     [half](const Vec3& p) {
                       const double dz = std::abs(p.z) - half;
                       return p.x * p.x + p.y * p.y + dz * dz >= 1.0;
                     }});
  return parts;
}

// ---- symmetric segment -----------------------------------------------------------------

SymmetricSegmentBody::SymmetricSegmentBody(double phi)
    : c_(std::cos(phi)), s_(std::sin(phi)) {
  if (!std::isfinite(phi) || phi < 0.0 || phi > kPi / 2.0)
    throw std::domain_error("segment angle must lie in [0, pi/2]");
}

bool SymmetricSegmentBody::contains(const Vec3& p) const {
  return p.norm2() <= 1.0 && std::abs(p.z) <= c_;
}

Aabb SymmetricSegmentBody::bounds() const {
  return {{-1.0, -1.0, -c_}, {1.0, 1.0, c_}};
}

double SymmetricSegmentBody::support(const Vec3& u) const {
  const double uz = std::abs(u.z);
  if (uz <= c_) return 1.0;
  return s_ * std::sqrt(std::max(0.0, 1.0 - u.z * u.z)) + c_ * uz;
}

std::vector<ConvexBody::BoundaryPatch> SymmetricSegmentBody::boundary() const {
  const double c = c_, s = s_;
  std::vector<BoundaryPatch> parts;
  parts.push_back({4.0 * kPi,
                   [](double, double, rng::SplitMix64& g) { return g.unit_vector(); },
                   [c](const Vec3& p) { return std::abs(p.z) <= c; }});
  if (s > 0.0)
    for (double sz : {1.0, -1.0})
      parts.push_back({kPi * s * s,
                       [c, s, sz](double u1, double u2, rng::SplitMix64&) {
                         const double r = s * std::sqrt(u1);
                         const double th = kTwoPi * u2;
                         return Vec3{r * std::cos(th), r * std::sin(th), sz * c};
                       },
                       [](const Vec3&) { return true; }});
  return parts;
}

// ---- cap body ---------------------------------------------------------------------------

CapBodyHull::CapBodyHull(double phi) : c_(std::cos(phi)), s_(std::sin(phi)) {
  // matches the closed-form guard: cos(pi/2) rounds to ~6e-17, so a plain
  // positivity test would admit a degenerate body with its apex near 1e16
  if (!std::isfinite(phi) || phi < 0.0 || !(std::cos(phi) > 1e-12))
    throw std::domain_error("cap body angle must lie in [0, pi/2)");
  apex_ = 1.0 / c_;
}

bool CapBodyHull::contains(const Vec3& p) const {
  if (p.norm2() <= 1.0) return true;
  if (s_ == 0.0) return false;
  const double az = std::abs(p.z);
  if (az < c_ || az > apex_) return false;
  const double rho = std::hypot(p.x, p.y);
  return rho <= c_ * (apex_ - az) / s_;
}

Aabb CapBodyHull::bounds() const {
  return {{-1.0, -1.0, -apex_}, {1.0, 1.0, apex_}};
}

double CapBodyHull::support(const Vec3& u) const {
  return std::max(1.0, apex_ * std::abs(u.z));
}

std::vector<ConvexBody::BoundaryPatch> CapBodyHull::boundary() const {
  const double c = c_, s = s_, apex = apex_;
  std::vector<BoundaryPatch> parts;
  parts.push_back({4.0 * kPi,
                   [](double, double, rng::SplitMix64& g) { return g.unit_vector(); },
                   [c, s, apex](const Vec3& p) {
                     if (s == 0.0) return true;
                     const double az = std::abs(p.z);
                     if (az <= c) return true;
                     // Strictly inside the open cone solid means off the hull.
                     const double rho = std::hypot(p.x, p.y);
                     return rho >= c * (apex - az) / s;
                   }});
  if (s > 0.0) {
    const double lateral = kPi * s * s / c;  // pi * base radius * slant
    for (double sz : {1.0, -1.0})
      parts.push_back({lateral,
                       [c, s, apex, sz](double u1, double u2, rng::SplitMix64&) {
                         const double t = std::sqrt(u1);  // area-uniform along slant
                         const double th = kTwoPi * u2;
                         const double rho = t * s;
                         const double z = apex - t * (apex - c);
                         return Vec3{rho * std::cos(th), rho * std::sin(th), sz * z};
                       },
                       [](const Vec3& p) { return p.norm2() >= 1.0; }});
  }
  return parts;
}

// ---- estimators -------------------------------------------------------------------------

Estimate mc_volume_body(const ConvexBody& body, const McConfig& cfg, int max_workers) {
  validate(cfg);
  const Aabb box = body.bounds();
  if (box.empty()) return {0.0, 0.0, cfg.n_samples};
  const Vec3 span = box.hi - box.lo;

  auto chunk = [&](int c) -> std::int64_t {
    rng::SplitMix64 g(rng::chunk_seed(cfg.seed, 0x1001, c));
    const std::int64_t n = detail::chunk_size(cfg.n_samples, cfg.n_chunks, c);
    std::int64_t hits = 0;
    for (std::int64_t s = 0; s < n; ++s) {
      const Vec3 p = box.lo + Vec3{span.x * g.uniform(), span.y * g.uniform(),
                                   span.z * g.uniform()};
      if (body.contains(p)) ++hits;
    }
    return hits;
  };
  const auto partials =
      detail::run_chunks<std::int64_t>(cfg.n_chunks, max_workers, chunk);
  std::int64_t hits = 0;
  for (std::int64_t h : partials) hits += h;

  const double n = static_cast<double>(cfg.n_samples);
  const double p = static_cast<double>(hits) / n;
  const double bv = box.volume();
  return {bv * p, bv * std::sqrt(p * (1.0 - p) / n), cfg.n_samples};
}

Estimate mc_area_body(const ConvexBody& body, const McConfig& cfg, int max_workers) {
  validate(cfg);
  const auto parts = body.boundary();
  double value = 0.0, var = 0.0;
  for (size_t part = 0; part < parts.size(); ++part) {
    const auto& bp = parts[part];
    if (bp.area <= 0.0) continue;
    auto chunk = [&](int c) -> std::int64_t {
      rng::SplitMix64 g(
          rng::chunk_seed(cfg.seed, 0x2001 + static_cast<std::uint64_t>(part), c));
      const std::int64_t n = detail::chunk_size(cfg.n_samples, cfg.n_chunks, c);
      std::int64_t hits = 0;
      for (std::int64_t s = 0; s < n; ++s) {
        const Vec3 p = bp.sample(g.uniform(), g.uniform(), g);
        if (bp.counts(p)) ++hits;
      }
      return hits;
    };
    const auto partials =
        detail::run_chunks<std::int64_t>(cfg.n_chunks, max_workers, chunk);
    std::int64_t hits = 0;
    for (std::int64_t h : partials) hits += h;
    const double n = static_cast<double>(cfg.n_samples);
    const double frac = static_cast<double>(hits) / n;
    value += bp.area * frac;
    var += bp.area * bp.area * frac * (1.0 - frac) / n;
  }
  return {value, std::sqrt(var), cfg.n_samples};
}

Estimate mc_mean_width_body(const ConvexBody& body, std::int64_t n_dirs,
                            std::uint64_t seed, int max_workers) {
  if (n_dirs <= 0) throw std::domain_error("n_dirs must be positive");
  const int n_chunks = static_cast<int>(std::min<std::int64_t>(64, n_dirs));

  struct Moments {
    CompensatedSum w, w2;
  };
  auto chunk = [&](int c) -> Moments {
    rng::SplitMix64 g(rng::chunk_seed(seed, 0x3001, c));
    const std::int64_t n = detail::chunk_size(n_dirs, n_chunks, c);
    Moments m;
    for (std::int64_t s = 0; s < n; ++s) {
      const Vec3 u = g.unit_vector();
      const double w = body.support(u) + body.support(-u);
      m.w.add(w);
      m.w2.add(w * w);
    }
    return m;
  };
  const auto partials = detail::run_chunks<Moments>(n_chunks, max_workers, chunk);
  CompensatedSum w, w2;
  for (const Moments& m : partials) {
    w.add(m.w.total());
    w2.add(m.w2.total());
  }
  const double n = static_cast<double>(n_dirs);
  const double mean = w.total() / n;
  const double var =
      n > 1 ? std::max(0.0, (w2.total() - n * mean * mean) / (n - 1.0)) : 0.0;
  return {mean, std::sqrt(var / n), n_dirs};
}

}  // namespace ballm
