// Monte Carlo estimators: determinism, statistical agreement with closed forms,
// and the projection-based support function.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ballm/exact.hpp"
#include "ballm/montecarlo.hpp"

using namespace ballm;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("splitmix64 stream basics") {
  rng::SplitMix64 a(12345), b(12345), c(54321);
  CHECK(a.next() == b.next());
  CHECK(a.next() == b.next());
  rng::SplitMix64 d(12345);
  (void)c.next();
  double lo = 1.0, hi = 0.0, mean = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const double u = d.uniform();
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    mean += u;
  }
  mean /= 20000;
  CHECK(lo >= 0.0);
  CHECK(hi < 1.0);
  CHECK(std::abs(mean - 0.5) < 0.01);
  // unit vectors are unit length with near-zero mean
  rng::SplitMix64 g(7);
  Vec3 sum{};
  for (int i = 0; i < 20000; ++i) {
    const Vec3 u = g.unit_vector();
    CHECK(std::abs(u.norm() - 1.0) <= 1e-12);
    sum += u;
  }
  CHECK(sum.norm() / 20000 < 0.02);
}

TEST_CASE("chunk seeds differ across streams and chunks") {
  const std::uint64_t s = rng::chunk_seed(42, 0x1001, 0);
  CHECK(s != rng::chunk_seed(42, 0x1001, 1));
  CHECK(s != rng::chunk_seed(42, 0x2001, 0));
  CHECK(s != rng::chunk_seed(43, 0x1001, 0));
  CHECK(s == rng::chunk_seed(42, 0x1001, 0));
}

TEST_CASE("compensated summation") {
  CompensatedSum cs;
  for (int i = 0; i < 10'000'000; ++i) cs.add(0.1);
  CHECK(cs.total() == doctest::Approx(1e6).epsilon(1e-12));
  CompensatedSum tiny;
  tiny.add(1.0);
  tiny.add(1e-16);
  tiny.add(-1.0);
  CHECK(tiny.total() == doctest::Approx(1e-16).epsilon(1e-3));
}

TEST_CASE("results are identical for any worker count") {
  const BallSet set = trihedron_balls();
  const McConfig cfg{400'000, 99, 64};
  const Estimate v1 = mc_volume(set, cfg, 1);
  const Estimate v3 = mc_volume(set, cfg, 3);
  const Estimate v8 = mc_volume(set, cfg, 8);
  CHECK(v1.value == v3.value);
  CHECK(v3.value == v8.value);
  CHECK(v1.std_error == v8.std_error);
  const Estimate a1 = mc_surface_area(set, cfg, 1);
  const Estimate a8 = mc_surface_area(set, cfg, 8);
  CHECK(a1.value == a8.value);
  const Estimate w1 = mc_mean_width(set, 5000, 99, 1);
  const Estimate w8 = mc_mean_width(set, 5000, 99, 8);
  CHECK(w1.value == w8.value);
  CHECK(w1.std_error == w8.std_error);
}

TEST_CASE("changing the seed changes the estimate, same seed repeats it") {
  const BallSet set = dihedron_balls();
  const Estimate a = mc_volume(set, {200'000, 1, 64});
  const Estimate b = mc_volume(set, {200'000, 2, 64});
  const Estimate c = mc_volume(set, {200'000, 1, 64});
  CHECK(a.value != b.value);
  CHECK(a.value == c.value);
}

TEST_CASE("volume estimates agree with closed forms within 4 sigma") {
  const McConfig cfg{1'000'000, 4242, 64};
  const Estimate d = mc_volume(dihedron_balls(), cfg);
  CHECK(std::abs(d.value - dihedron_measures().volume) <= 4.0 * d.std_error);
  const Estimate t = mc_volume(tetrahedron_balls(), cfg);
  CHECK(std::abs(t.value - reuleaux_tetrahedron_measures().volume) <=
        4.0 * t.std_error);
  CHECK(d.std_error > 0.0);
  CHECK(d.n_samples == 1'000'000);
}

TEST_CASE("area estimates agree with closed forms within 4 sigma") {
  const McConfig cfg{1'000'000, 4242, 64};
  const Estimate d = mc_surface_area(dihedron_balls(), cfg);
  CHECK(std::abs(d.value - dihedron_measures().surface_area) <= 4.0 * d.std_error);
  const Estimate t = mc_surface_area(trihedron_balls(), cfg);
  CHECK(std::abs(t.value - trihedron_measures().surface_area) <= 4.0 * t.std_error);
}

TEST_CASE("mean width estimates agree with closed forms within 4 sigma") {
  const Estimate d = mc_mean_width(dihedron_balls(), 20'000, 4242);
  CHECK(std::abs(d.value - dihedron_measures().mean_width) <= 4.0 * d.std_error);
  const Estimate t = mc_mean_width(tetrahedron_balls(), 20'000, 4242);
  CHECK(std::abs(t.value - reuleaux_tetrahedron_measures().mean_width) <=
        4.0 * t.std_error);
}

TEST_CASE("statistical consistency across 20 seeds") {
  // at 4 sigma, at least 19 of 20 independent runs must cover the true value
  const double want = trihedron_measures().volume;
  int hits = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Estimate e = mc_volume(trihedron_balls(), {300'000, seed, 64});
    if (std::abs(e.value - want) <= 4.0 * e.std_error) ++hits;
  }
  CHECK(hits >= 19);
}

TEST_CASE("single-ball estimates") {
  const BallSet ball(std::vector<Sphere>{Sphere({1.0, 2.0, 3.0}, 0.5)});
  const Estimate v = mc_volume(ball, {400'000, 7, 64});
  CHECK(std::abs(v.value - 4.0 * kPi / 3.0 * 0.125) <= 4.0 * v.std_error);
  const Estimate a = mc_surface_area(ball, {400'000, 7, 64});
  // every surface point counts: zero variance, exact value
  CHECK(a.value == doctest::Approx(4.0 * kPi * 0.25).epsilon(1e-12));
  CHECK(a.std_error == 0.0);
  const Estimate w = mc_mean_width(ball, 2000, 7);
  CHECK(w.value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("support function: unit ball and two-ball solid") {
  const BallSet ball(std::vector<Sphere>{Sphere({0.0, 0.0, 0.0}, 1.0)});
  CHECK(support_function(ball, Direction({0.0, 0.0, 1.0})) ==
        doctest::Approx(1.0).epsilon(1e-12));
  const BallSet d = dihedron_balls();
  // along the symmetry axis the deepest point of the far ball is the cap apex
  CHECK(support_function(d, Direction({1.0, 0.0, 0.0})) ==
        doctest::Approx(0.5).epsilon(1e-9));
  CHECK(support_function(d, Direction({-1.0, 0.0, 0.0})) ==
        doctest::Approx(0.5).epsilon(1e-9));
  // perpendicular to the axis the support touches the shared rim circle
  CHECK(support_function(d, Direction({0.0, 1.0, 0.0})) ==
        doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-9));
  CHECK(support_function(d, Direction({0.0, 0.0, -1.0})) ==
        doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-9));
  CHECK_THROWS_AS(support_function(d, Direction({0.0, 1.0, 0.0}), -1.0),
                  std::domain_error);
}

TEST_CASE("support function: widths of the four-ball solid stay in range") {
  const BallSet tet = tetrahedron_balls();
  const double hi = std::sqrt(3.0) - 1.0 / std::sqrt(2.0);
  rng::SplitMix64 g(2024);
  double w_min = 1e300, w_max = -1e300;
  for (int i = 0; i < 500; ++i) {
    const Vec3 u = g.unit_vector();
    const double w = support_function(tet, Direction(u)) +
                     support_function(tet, Direction(-u));
    w_min = std::min(w_min, w);
    w_max = std::max(w_max, w);
  }
  CHECK(w_min >= 1.0 - 1e-6);
  CHECK(w_max <= hi + 1e-6);
  // the spread genuinely explores the range
  CHECK(w_max - w_min > 0.01);
}

TEST_CASE("support function rejects an empty intersection") {
  const BallSet far(std::vector<Sphere>{Sphere({0.0, 0.0, 0.0}, 1.0),
                                        Sphere({5.0, 0.0, 0.0}, 1.0)});
  CHECK_THROWS_AS(support_function(far, Direction({0.0, 0.0, 1.0})),
                  std::invalid_argument);
}

TEST_CASE("emptiness probe") {
  CHECK(!intersection_empty(dihedron_balls()));
  CHECK(!intersection_empty(tetrahedron_balls()));
  CHECK(!intersection_empty(
      BallSet(std::vector<Sphere>{Sphere({4.0, 4.0, 4.0}, 2.0)})));
  CHECK(intersection_empty(BallSet(std::vector<Sphere>{
      Sphere({0.0, 0.0, 0.0}, 1.0), Sphere({5.0, 0.0, 0.0}, 1.0)})));
  // externally tangent balls: a single shared point, not empty
  CHECK(!intersection_empty(BallSet(std::vector<Sphere>{
      Sphere({0.0, 0.0, 0.0}, 1.0), Sphere({2.0, 0.0, 0.0}, 1.0)})));
  // three pairwise-overlapping balls with empty joint intersection
  CHECK(intersection_empty(BallSet(std::vector<Sphere>{
      Sphere({0.0, 0.0, 0.0}, 1.0), Sphere({1.9, 0.0, 0.0}, 1.0),
      Sphere({0.95, 1.64, 0.0}, 1.0)})));
}

TEST_CASE("empty intersection yields zero-volume estimates") {
  const BallSet far(std::vector<Sphere>{Sphere({0.0, 0.0, 0.0}, 1.0),
                                        Sphere({5.0, 0.0, 0.0}, 1.0)});
  const Estimate v = mc_volume(far, {50'000, 3, 64});
  CHECK(v.value == 0.0);
  const Estimate a = mc_surface_area(far, {50'000, 3, 64});
  CHECK(a.value == 0.0);
}
