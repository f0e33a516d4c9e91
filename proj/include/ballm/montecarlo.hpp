// Deterministic Monte Carlo estimators and the projection-based support function.
//
// Randomness is organized in chunks: chunk c of a run draws from its own generator seeded
// by hash(seed, stream, c), and chunk partial sums are combined in fixed chunk order with
// compensated summation, so results are bit-identical for a given (n_samples, seed,
// n_chunks) regardless of how many worker threads execute the chunks.
#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

#include "ballm/geometry.hpp"

namespace ballm {

struct McConfig {
  std::int64_t n_samples = 10'000'000;
  std::uint64_t seed = 42;
  int n_chunks = 64;
};

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
  std::int64_t n_samples = 0;
};

namespace rng {

// splitmix64: both the per-chunk seed hash and the sample stream.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  // Marsaglia polar method; one deviate per call, mate discarded for determinism.
  double normal() {
    while (true) {
      const double a = 2.0 * uniform() - 1.0;
      const double b = 2.0 * uniform() - 1.0;
      const double s = a * a + b * b;
      if (s > 0.0 && s < 1.0) return a * std::sqrt(-2.0 * std::log(s) / s);
    }
  }
  Vec3 unit_vector() {
    while (true) {
      const Vec3 v{normal(), normal(), normal()};
      const double n = v.norm();
      if (n > 1e-12) return v / n;
    }
  }
};

inline std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t stream,
                                std::uint64_t chunk) {
  SplitMix64 h(seed ^ (stream * 0xD6E8FEB86659FD93ull) ^
               (chunk * 0xA5A5A5A5A5A5A5A5ull));
  h.next();
  return h.next();
}

}  // namespace rng

// Kahan-Neumaier compensated accumulator.
struct CompensatedSum {
  double sum = 0.0, comp = 0.0;
  void add(double x) {
    const double t = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  double total() const { return sum + comp; }
};

namespace detail {

inline std::int64_t chunk_size(std::int64_t n, int chunks, int c) {
  return n / chunks + (c < n % chunks ? 1 : 0);
}

// Runs chunk_fn(c) for c in [0, n_chunks) on up to max_workers threads, storing results
// by chunk index so the caller can combine them in fixed order.
template <class R, class Fn>
std::vector<R> run_chunks(int n_chunks, int max_workers, const Fn& chunk_fn) {
  std::vector<R> results(n_chunks);
  int workers = max_workers > 0 ? max_workers
                                : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min(workers, n_chunks));
  if (workers == 1) {
    for (int c = 0; c < n_chunks; ++c) results[c] = chunk_fn(c);
    return results;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int c; (c = next.fetch_add(1)) < n_chunks;) results[c] = chunk_fn(c);
    });
  for (std::thread& t : pool) t.join();
  return results;
}

}  // namespace detail

// Rejection sampling in the intersection of the spheres' bounding boxes.
Estimate mc_volume(const BallSet& set, const McConfig& cfg = {}, int max_workers = 0);

// Per sphere: n_samples uniform surface points; contribution 4 pi r^2 times the fraction
// strictly inside all other balls. Component errors combine by independence.
Estimate mc_surface_area(const BallSet& set, const McConfig& cfg = {}, int max_workers = 0);

// h_B(u) by Dykstra projection of a far point onto the intersection, then an active-set
// polish (single ball / circle / vertex closed forms, guarded by membership) that removes
// the far-point projection bias. Throws std::runtime_error if projection stalls.
double support_function(const BallSet& set, const Direction& u, double tol = 1e-10);

// Mean of h(u) + h(-u) over n_dirs uniform directions, the antithetic pair evaluated
// jointly; std_error is the sample standard error of the widths.
Estimate mc_mean_width(const BallSet& set, std::int64_t n_dirs, std::uint64_t seed,
                       int max_workers = 0);

// Cyclic projection feasibility probe from the centroid of the centers.
bool intersection_empty(const BallSet& set);

}  // namespace ballm
