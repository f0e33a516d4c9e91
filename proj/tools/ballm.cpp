// ballm: exact and numerical measures (volume, surface area, mean width) of
// intersections of balls and related constant-width comparison bodies.
#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ballm/bodies.hpp"
#include "ballm/exact.hpp"
#include "ballm/geometry.hpp"
#include "ballm/hyperlens.hpp"
#include "ballm/integrals.hpp"
#include "ballm/measures.hpp"
#include "ballm/montecarlo.hpp"
#include "ballm/report.hpp"
#include "ballm/skeleton.hpp"

namespace {

using namespace ballm;

constexpr double kPi = std::numbers::pi;

// I/O failures get their own exit code (3), distinct from domain errors (2).
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

void emit(const Report& r, const std::string& format) {
  std::fputs((format == "json" ? to_json(r) : to_table(r)).c_str(), stdout);
}

Report closed_report(const Measures& m) {
  Report r;
  r.volume = m.volume;
  r.surface_area = m.surface_area;
  r.mean_width = m.mean_width;
  r.methods = {{"volume", kMethodClosedForm},
               {"surface_area", kMethodClosedForm},
               {"mean_width", kMethodClosedForm}};
  return r;
}

void add_lambda(Report& r, const BallSet& set) {
  try {
    const double lambda = adjacent_vertex_distance(set);
    r.lambda = lambda;
    if (r.volume) r.vl_over_lambda3 = *r.volume / (lambda * lambda * lambda);
  } catch (const std::invalid_argument&) {
    // fewer than two vertices: lambda undefined, omit
  }
}

Report skeleton_report(const BallSet& set, const McConfig& cfg) {
  const BallSetMeasures bm = ballset_measures(set, cfg);
  Report r;
  r.volume = bm.measures.volume;
  r.surface_area = bm.measures.surface_area;
  r.mean_width = bm.measures.mean_width;
  if (bm.empty) {
    r.empty = true;
    return r;
  }
  r.methods["volume"] = bm.volume_method == VolumeMethod::divergence
                            ? kMethodQuadrature
                            : kMethodMonteCarlo;
  if (bm.volume_std_error > 0.0) r.std_errors["volume"] = bm.volume_std_error;
  r.methods["surface_area"] = kMethodSkeleton;
  r.methods["mean_width"] = kMethodSkeleton;
  add_lambda(r, set);
  return r;
}

BallSet ballset_from_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open input file: " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw IoError("malformed JSON in " + path + ": " + e.what());
  }
  if (!j.is_array())
    throw IoError("malformed sphere list in " + path +
                  ": expected an array of {\"center\": [x,y,z], \"radius\": r}");
  std::vector<Sphere> spheres;
  try {
    for (const auto& item : j) {
      const auto& c = item.at("center");
      spheres.emplace_back(Vec3{c.at(0).get<double>(), c.at(1).get<double>(),
                                c.at(2).get<double>()},
                           item.at("radius").get<double>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw IoError("malformed sphere list in " + path + ": " + e.what());
  }
  return BallSet(std::move(spheres));  // value errors propagate as domain errors
}

// ---- measure ---------------------------------------------------------------

struct MeasureArgs {
  std::string solid;
  std::optional<double> phi, delta, ell;
  std::string input;
  std::string format = "table";
  std::int64_t samples = 10'000'000;
  std::uint64_t seed = 42;
};

void require_only(const MeasureArgs& a, bool phi_ok, bool delta_ok, bool ell_ok,
                  bool input_ok) {
  if (a.phi && !phi_ok)
    throw std::domain_error("--phi applies only to lens, segment, and cap-body");
  if (a.delta && !delta_ok) throw std::domain_error("--delta applies only to lens");
  if (a.ell && !ell_ok)
    throw std::domain_error("--ell applies only to capped-cylinder");
  if (!a.input.empty() && !input_ok)
    throw std::domain_error("--input applies only to custom");
}

int run_custom(const std::string& path, const std::string& format,
               std::int64_t samples, std::uint64_t seed);

int run_measure(const MeasureArgs& a) {
  const McConfig cfg{a.samples, a.seed, 64};
  Report r;
  if (a.solid == "dihedron") {
    require_only(a, false, false, false, false);
    r = closed_report(dihedron_measures());
    add_lambda(r, dihedron_balls());
  } else if (a.solid == "lens") {
    require_only(a, true, true, false, false);
    if (a.phi.has_value() == a.delta.has_value())
      throw std::domain_error(
          "lens requires exactly one of --phi or --delta (they parametrize the "
          "same body, so supplying both is rejected)");
    const AngularRadius phi(a.phi ? *a.phi
                                  : std::acos(CenterDistance(*a.delta).value() / 2.0));
    r = closed_report(lens_measures(phi));
  } else if (a.solid == "trihedron") {
    require_only(a, false, false, false, false);
    r = closed_report(trihedron_measures());
    add_lambda(r, trihedron_balls());
  } else if (a.solid == "tetrahedron") {
    require_only(a, false, false, false, false);
    r = closed_report(reuleaux_tetrahedron_measures());
    add_lambda(r, tetrahedron_balls());
  } else if (a.solid == "meissner") {
    require_only(a, false, false, false, false);
    r = closed_report(meissner_measures());
  } else if (a.solid == "capped-cylinder") {
    require_only(a, false, false, true, false);
    if (!a.ell) throw std::domain_error("capped-cylinder requires --ell");
    r = closed_report(capped_cylinder_measures(CylinderLength(*a.ell)));
  } else if (a.solid == "segment") {
    require_only(a, true, false, false, false);
    if (!a.phi) throw std::domain_error("segment requires --phi");
    r = closed_report(symmetric_segment_measures(AngularRadius(*a.phi)));
  } else if (a.solid == "cap-body") {
    require_only(a, true, false, false, false);
    if (!a.phi) throw std::domain_error("cap-body requires --phi");
    r = closed_report(cap_body_measures(AngularRadius(*a.phi)));
  } else if (a.solid == "hexahedron" || a.solid == "dodecahedron") {
    require_only(a, false, false, false, false);
    r = skeleton_report(canonical_ballsets(a.solid), cfg);
  } else if (a.solid == "custom") {
    require_only(a, false, false, false, true);
    if (a.input.empty()) throw std::domain_error("custom requires --input");
    return run_custom(a.input, a.format, a.samples, a.seed);
  } else {
    throw std::domain_error("unknown solid: " + a.solid);
  }
  emit(r, a.format);
  return 0;
}

// ---- custom ----------------------------------------------------------------

int run_custom(const std::string& path, const std::string& format,
               std::int64_t samples, std::uint64_t seed) {
  const BallSet set = ballset_from_file(path);
  const McConfig cfg{samples, seed, 64};
  Report r;
  if (intersection_empty(set)) {
    r.volume = 0.0;
    r.surface_area = 0.0;
    r.mean_width = 0.0;
    r.empty = true;
    emit(r, format);
    return 0;
  }

  const double r0 = set.balls[0].radius;
  bool equal_radii = true;
  for (const Sphere& s : set.balls)
    if (std::abs(s.radius - r0) > 1e-12 * r0) equal_radii = false;

  const std::int64_t dirs = std::max<std::int64_t>(10'000, samples / 100);
  const Estimate ev = mc_volume(set, cfg);
  const Estimate ea = mc_surface_area(set, cfg);
  const Estimate ew = mc_mean_width(set, dirs, seed);
  if (equal_radii) {
    r = skeleton_report(set, cfg);
    r.mc_values = {{"volume", ev.value},
                   {"surface_area", ea.value},
                   {"mean_width", ew.value}};
    r.std_errors["volume"] = ev.std_error;
    r.std_errors["surface_area"] = ea.std_error;
    r.std_errors["mean_width"] = ew.std_error;
    auto delta_sigma = [](double a, double b, double sigma) {
      return sigma > 0.0 ? std::abs(a - b) / sigma : 0.0;
    };
    r.deltas_sigma = {
        {"volume", delta_sigma(*r.volume, ev.value, ev.std_error)},
        {"surface_area", delta_sigma(*r.surface_area, ea.value, ea.std_error)},
        {"mean_width", delta_sigma(*r.mean_width, ew.value, ew.std_error)}};
  } else {
    r.volume = ev.value;
    r.surface_area = ea.value;
    r.mean_width = ew.value;
    r.methods = {{"volume", kMethodMonteCarlo},
                 {"surface_area", kMethodMonteCarlo},
                 {"mean_width", kMethodMonteCarlo}};
    r.std_errors = {{"volume", ev.std_error},
                    {"surface_area", ea.std_error},
                    {"mean_width", ew.std_error}};
    add_lambda(r, set);
    r.notes.push_back(
        "unequal radii: boundary-structure evaluation unavailable, Monte Carlo "
        "estimates only");
  }
  emit(r, format);
  return 0;
}

// ---- open-question ---------------------------------------------------------

int run_open_question(const std::string& solid, const std::string& format,
                      std::int64_t samples, std::uint64_t seed) {
  const BallSet set = canonical_ballsets(solid);
  const McConfig cfg{samples, seed, 64};
  Report r = skeleton_report(set, cfg);
  const std::int64_t dirs = std::max<std::int64_t>(10'000, samples / 100);
  const Estimate ev = mc_volume(set, cfg);
  const Estimate ea = mc_surface_area(set, cfg);
  const Estimate ew = mc_mean_width(set, dirs, seed);
  r.mc_values = {{"volume", ev.value},
                 {"surface_area", ea.value},
                 {"mean_width", ew.value}};
  r.std_errors["volume"] = ev.std_error;
  r.std_errors["surface_area"] = ea.std_error;
  r.std_errors["mean_width"] = ew.std_error;
  auto delta_sigma = [](double a, double b, double sigma) {
    return sigma > 0.0 ? std::abs(a - b) / sigma : 0.0;
  };
  r.deltas_sigma = {
      {"volume", delta_sigma(*r.volume, ev.value, ev.std_error)},
      {"surface_area", delta_sigma(*r.surface_area, ea.value, ea.std_error)},
      {"mean_width", delta_sigma(*r.mean_width, ew.value, ew.std_error)}};
  if (solid == "dodecahedron")
    r.notes.push_back(
        "informational only: the twelve-ball configuration (unit balls at "
        "icosahedron vertex directions, adjacent centers one radius apart) is "
        "this tool's own construction");
  emit(r, format);
  return 0;
}

// ---- verify ----------------------------------------------------------------

class Checker {
 public:
  void record(const std::string& name, bool ok, double severity,
              const std::string& detail) {
    std::printf("%-4s %-64s %s\n", ok ? "ok" : "FAIL", name.c_str(), detail.c_str());
    ++total_;
    if (!ok) ++failures_;
    if (severity > worst_severity_) {
      worst_severity_ = severity;
      worst_name_ = name;
    }
  }

  void check_abs(const std::string& name, double got, double want, double tol) {
    const double err = std::abs(got - want);
    record(name, err <= tol, err / tol,
           "got " + num(got) + " want " + num(want) + " |err| " + num(err) +
               " tol " + num(tol));
  }

  void check_rel(const std::string& name, double got, double want, double rel) {
    check_abs(name, got, want, rel * std::max(std::abs(want), 1e-300));
  }

  void check_sigma(const std::string& name, const Estimate& est, double want) {
    const double tol = 4.0 * est.std_error + 1e-12 * std::max(1.0, std::abs(want));
    const double err = std::abs(est.value - want);
    record(name, err <= tol, err / tol,
           "got " + num(est.value) + " +- " + num(est.std_error) + " want " +
               num(want) + " |err|/sigma " +
               (est.std_error > 0.0 ? num(err / est.std_error) : "0"));
  }

  void check_true(const std::string& name, bool ok, const std::string& detail) {
    record(name, ok, ok ? 0.0 : 1e9, detail);
  }

  int finish() const {
    std::printf("\n%d checks, %d failures", total_, failures_);
    if (failures_ > 0)
      std::printf("; worst offender: %s (err/tol = %s)", worst_name_.c_str(),
                  num(worst_severity_).c_str());
    std::printf("\n");
    return failures_ == 0 ? 0 : 1;
  }

 private:
  int total_ = 0;
  int failures_ = 0;
  double worst_severity_ = 0.0;
  std::string worst_name_;
};

int run_verify(double tolerance, std::int64_t samples, std::uint64_t seed,
               bool mutate) {
  Checker ck;
  // The mutation hook simulates a corrupted closed-form constant: every
  // closed-form value is scaled by 1%, and the suite must then fail.
  const double mf = mutate ? 1.01 : 1.0;
  auto cf = [mf](Measures m) {
    m.volume *= mf;
    m.surface_area *= mf;
    m.mean_width *= mf;
    return m;
  };
  const McConfig cfg{samples, seed, 64};
  const std::int64_t grid_samples = std::max<std::int64_t>(1000, samples / 10);
  const McConfig grid_cfg{grid_samples, seed, 64};
  const std::int64_t dirs =
      std::min<std::int64_t>(200'000, std::max<std::int64_t>(1000, samples / 100));

  if (mutate)
    std::printf("mutation mode: closed-form values perturbed by 1%% — the suite "
                "must fail\n\n");

  // --- canonical solids: closed form vs quadrature vs boundary structure vs MC
  struct Canonical {
    const char* name;
    Measures closed;
    BallSet set;
    HeightFieldSolid hf;
  };
  const Canonical canon[] = {
      {"dihedron", cf(dihedron_measures()), dihedron_balls(), HeightFieldSolid::dihedron},
      {"trihedron", cf(trihedron_measures()), trihedron_balls(),
       HeightFieldSolid::trihedron},
      {"tetrahedron", cf(reuleaux_tetrahedron_measures()), tetrahedron_balls(),
       HeightFieldSolid::tetrahedron},
  };
  for (const Canonical& c : canon) {
    const std::string n = c.name;
    const double quad_v = height_field_volume(c.hf);
    const double quad_a = height_field_area(c.hf);
    const double div_v = divergence_volume(c.set);
    ck.check_abs(n + ": volume, double integral vs closed form", quad_v,
                 c.closed.volume, 1e-8);
    ck.check_abs(n + ": area, double integral vs closed form", quad_a,
                 c.closed.surface_area, 1e-8);
    ck.check_abs(n + ": volume, divergence theorem vs closed form", div_v,
                 c.closed.volume, 1e-8);
    ck.check_abs(n + ": volume, divergence vs double integral", div_v, quad_v, 1e-7);

    const auto faces = face_areas(c.set);
    const auto edges = edge_arcs(c.set);
    double face_sum = 0.0;
    for (const FacePatch& f : faces) face_sum += f.area;
    ck.check_rel(n + ": area, face sum vs closed form", face_sum,
                 c.closed.surface_area, 1e-10);
    ck.check_abs(n + ": area, face sum vs double integral", face_sum, quad_a, 1e-7);
    ck.check_rel(n + ": mean width, curvature formula vs closed form",
                 indirect_mean_width(faces, edges), c.closed.mean_width, 1e-10);

    ck.check_sigma(n + ": volume, Monte Carlo", mc_volume(c.set, cfg),
                   c.closed.volume);
    ck.check_sigma(n + ": area, Monte Carlo", mc_surface_area(c.set, cfg),
                   c.closed.surface_area);
    ck.check_sigma(n + ": mean width, Monte Carlo",
                   mc_mean_width(c.set, dirs, seed), c.closed.mean_width);
  }

  // --- two-ball lens family across angles
  for (double phi : {kPi / 6.0, kPi / 4.0, kPi / 3.0, 1.2, 1.45}) {
    const std::string n = "lens(phi=" + num(phi) + ")";
    const Measures closed = cf(lens_measures(AngularRadius(phi)));
    const double delta = 2.0 * std::cos(phi);
    const BallSet set = lens_balls(delta);
    const auto faces = face_areas(set);
    const auto edges = edge_arcs(set);
    double face_sum = 0.0;
    for (const FacePatch& f : faces) face_sum += f.area;
    ck.check_rel(n + ": area, face sum vs closed form", face_sum,
                 closed.surface_area, 1e-9);
    ck.check_rel(n + ": mean width, curvature formula vs closed form",
                 indirect_mean_width(faces, edges), closed.mean_width, 1e-9);
    ck.check_abs(n + ": volume, divergence theorem vs closed form",
                 divergence_volume(set), closed.volume, 1e-8);
    ck.check_rel(n + ": volume, distance form vs angle form",
                 mf * lens_volume_from_delta(CenterDistance(delta)), closed.volume,
                 1e-13);
  }
  {
    const Measures d = dihedron_measures();
    const Measures l = lens_measures(AngularRadius(kPi / 3.0));
    ck.check_rel("dihedron equals lens at phi = pi/3 (volume)", d.volume, l.volume,
                 tolerance);
    ck.check_rel("dihedron equals lens at phi = pi/3 (area)", d.surface_area,
                 l.surface_area, tolerance);
    ck.check_rel("dihedron equals lens at phi = pi/3 (mean width)", d.mean_width,
                 l.mean_width, tolerance);
  }

  // --- n-dimensional lens: reductions, ball cases, explicit n = 2 value
  {
    rng::SplitMix64 g(seed ^ 0x9E37u);
    double worst_v = 0.0, worst_a = 0.0;
    for (int i = 0; i < 50; ++i) {
      const double phi = 0.01 + (kPi / 2.0 - 0.02) * g.uniform();
      const Measures lm = lens_measures(AngularRadius(phi));
      const double v3 = ndim_lens_volume(Dimension(3), AngularRadius(phi));
      const double a3 = ndim_lens_area(Dimension(3), AngularRadius(phi));
      worst_v = std::max(worst_v, std::abs(v3 - lm.volume) / lm.volume);
      worst_a = std::max(worst_a, std::abs(a3 - lm.surface_area) / lm.surface_area);
    }
    ck.check_true("n=3 lens volume reduces to the angle formula (50 angles)",
                  worst_v * (mutate ? 101.0 : 1.0) <= 1e-12,
                  "worst relative deviation " + num(worst_v));
    ck.check_true("n=3 lens area reduces to the angle formula (50 angles)",
                  worst_a * (mutate ? 101.0 : 1.0) <= 1e-12,
                  "worst relative deviation " + num(worst_a));
  }
  for (int n = 2; n <= 8; ++n) {
    const double ball_v = std::pow(kPi, n / 2.0) / gamma_real(1.0 + n / 2.0);
    const double ball_a = 2.0 * std::pow(kPi, n / 2.0) / gamma_real(n / 2.0);
    ck.check_rel("n=" + std::to_string(n) + " lens at phi = pi/2 is the unit ball (volume)",
                 ndim_lens_volume(Dimension(n), AngularRadius(kPi / 2.0)), mf * ball_v,
                 1e-12);
    ck.check_rel("n=" + std::to_string(n) + " lens at phi = pi/2 is the unit ball (area)",
                 ndim_lens_area(Dimension(n), AngularRadius(kPi / 2.0)), mf * ball_a,
                 1e-12);
  }
  ck.check_rel("n=2 lens at phi = pi/3 equals the planar value",
               ndim_lens_volume(Dimension(2), AngularRadius(kPi / 3.0)),
               mf * (2.0 * kPi / 3.0 - std::sqrt(3.0) / 2.0), 1e-12);
  for (int n : {2, 4, 5}) {
    bool nondecreasing = true;
    double prev_v = -1.0, prev_a = -1.0;
    for (int k = 0; k <= 10; ++k) {
      const double phi = (kPi / 2.0) * k / 10.0;
      const double v = ndim_lens_volume(Dimension(n), AngularRadius(phi));
      const double a = ndim_lens_area(Dimension(n), AngularRadius(phi));
      if (v < prev_v - 1e-14 || a < prev_a - 1e-14) nondecreasing = false;
      prev_v = v;
      prev_a = a;
    }
    ck.check_true("n=" + std::to_string(n) + " lens measures nondecreasing in phi",
                  nondecreasing, "11-point grid");
  }

  // --- rotational constant-width comparison bodies across parameter grids
  std::printf("\nmean width for the capped-cylinder and cap-body families is "
              "checked at every grid point by direct support-function sampling "
              "of the hull bodies (analytic support h), not only at the "
              "ball-degenerate parameter\n\n");
  for (double ell : {0.0, 0.5, 1.0, 2.0}) {
    const std::string n = "capped-cylinder(ell=" + num(ell) + ")";
    const Measures closed = cf(capped_cylinder_measures(CylinderLength(ell)));
    const CappedCylinderBody body(ell);
    ck.check_sigma(n + ": volume, Monte Carlo", mc_volume_body(body, grid_cfg),
                   closed.volume);
    ck.check_sigma(n + ": area, Monte Carlo", mc_area_body(body, grid_cfg),
                   closed.surface_area);
    ck.check_sigma(n + ": mean width, support sampling",
                   mc_mean_width_body(body, dirs, seed), closed.mean_width);
  }
  for (double phi : {0.0, kPi / 6.0, kPi / 3.0, 4.0 * kPi / 9.0}) {
    const std::string n = "segment(phi=" + num(phi) + ")";
    const Measures closed = cf(symmetric_segment_measures(AngularRadius(phi)));
    const SymmetricSegmentBody body(phi);
    ck.check_sigma(n + ": volume, Monte Carlo", mc_volume_body(body, grid_cfg),
                   closed.volume);
    ck.check_sigma(n + ": area, Monte Carlo", mc_area_body(body, grid_cfg),
                   closed.surface_area);
    ck.check_sigma(n + ": mean width, support sampling",
                   mc_mean_width_body(body, dirs, seed), closed.mean_width);
  }
  for (double phi : {0.0, kPi / 6.0, kPi / 3.0, 4.0 * kPi / 9.0}) {
    const std::string n = "cap-body(phi=" + num(phi) + ")";
    const Measures closed = cf(cap_body_measures(AngularRadius(phi)));
    const CapBodyHull body(phi);
    ck.check_sigma(n + ": volume, Monte Carlo", mc_volume_body(body, grid_cfg),
                   closed.volume);
    ck.check_sigma(n + ": area, Monte Carlo", mc_area_body(body, grid_cfg),
                   closed.surface_area);
    ck.check_sigma(n + ": mean width, support sampling",
                   mc_mean_width_body(body, dirs, seed), closed.mean_width);
  }

  // --- smoothed constant-width companion of the four-ball solid
  {
    const Measures t = cf(reuleaux_tetrahedron_measures());
    const Measures m = cf(meissner_measures());
    ck.check_true("smoothed body: volume strictly below the four-ball solid",
                  m.volume < t.volume, num(m.volume) + " < " + num(t.volume));
    ck.check_true("smoothed body: area strictly below the four-ball solid",
                  m.surface_area < t.surface_area,
                  num(m.surface_area) + " < " + num(t.surface_area));
    ck.check_abs("smoothed body: mean width equals 1 exactly", m.mean_width, 1.0,
                 0.0 + 1e-15);
    ck.check_true("smoothed body: mean width below the four-ball solid",
                  m.mean_width < t.mean_width,
                  num(m.mean_width) + " < " + num(t.mean_width));
  }

  // --- six-ball solid: edge structure and scale-free volume ratio
  {
    const BallSet hex = hexahedron_balls();
    const BallSetMeasures bm = ballset_measures(hex, cfg);
    const double lambda = adjacent_vertex_distance(hex);
    const double ratio = bm.measures.volume / (lambda * lambda * lambda);
    ck.check_abs("hexahedron: volume over lambda^3", ratio, 1.508, 0.002);
    const auto edges = edge_arcs(hex);
    ck.check_true("hexahedron: twelve edges",
                  edges.size() == 12, std::to_string(edges.size()) + " edges");
    double worst_angle = 0.0;
    for (const EdgeArc& e : edges)
      worst_angle = std::max(worst_angle, std::abs(e.exterior_angle - kPi / 3.0));
    ck.check_true("hexahedron: every edge exterior angle is pi/3",
                  worst_angle <= 1e-9, "worst deviation " + num(worst_angle));
    ck.check_sigma("hexahedron: volume, Monte Carlo vs divergence",
                   mc_volume(hex, cfg), bm.measures.volume);
    ck.check_sigma("hexahedron: area, Monte Carlo vs face sum",
                   mc_surface_area(hex, cfg), bm.measures.surface_area);
  }

  // --- scaling covariance
  {
    const BallSet base = trihedron_balls();
    const BallSetMeasures b0 = ballset_measures(base, cfg);
    for (double s : {0.5, 2.0, 10.0}) {
      const BallSetMeasures bs = ballset_measures(scale_ballset(base, s), cfg);
      ck.check_rel("scaling s=" + num(s) + ": volume scales as s^3",
                   bs.measures.volume, s * s * s * b0.measures.volume, 1e-9);
      ck.check_rel("scaling s=" + num(s) + ": area scales as s^2",
                   bs.measures.surface_area, s * s * b0.measures.surface_area, 1e-9);
      ck.check_rel("scaling s=" + num(s) + ": mean width scales as s",
                   bs.measures.mean_width, s * b0.measures.mean_width, 1e-9);
    }
  }

  // --- isoperimetric sanity: 36 pi V^2 <= A^3 for every solid above
  {
    struct NamedMeasures {
      std::string name;
      Measures m;
    };
    std::vector<NamedMeasures> all = {
        {"dihedron", dihedron_measures()},
        {"trihedron", trihedron_measures()},
        {"tetrahedron", reuleaux_tetrahedron_measures()},
        {"meissner", meissner_measures()},
    };
    for (double phi : {kPi / 6.0, kPi / 3.0, 4.0 * kPi / 9.0}) {
      all.push_back({"lens(" + num(phi) + ")", lens_measures(AngularRadius(phi))});
      all.push_back(
          {"segment(" + num(phi) + ")", symmetric_segment_measures(AngularRadius(phi))});
      all.push_back({"cap-body(" + num(phi) + ")", cap_body_measures(AngularRadius(phi))});
    }
    for (double ell : {0.0, 1.0, 2.0})
      all.push_back(
          {"capped-cylinder(" + num(ell) + ")", capped_cylinder_measures(CylinderLength(ell))});
    bool ok = true;
    std::string detail = "all within slack";
    for (const auto& [name, m] : all) {
      const double lhs = 36.0 * kPi * m.volume * m.volume;
      const double rhs = m.surface_area * m.surface_area * m.surface_area;
      if (lhs > rhs + 1e-9) {
        ok = false;
        detail = name + ": 36 pi V^2 = " + num(lhs) + " > A^3 = " + num(rhs);
      }
    }
    ck.check_true("isoperimetric inequality across all solids", ok, detail);
  }

  // --- determinism across worker counts
  {
    const McConfig det_cfg{1'000'000, seed, 64};
    const BallSet set = dihedron_balls();
    const Estimate v1 = mc_volume(set, det_cfg, 1);
    const Estimate v2 = mc_volume(set, det_cfg, 2);
    const Estimate v8 = mc_volume(set, det_cfg, 8);
    ck.check_true("determinism: volume identical for 1/2/8 workers",
                  v1.value == v2.value && v2.value == v8.value,
                  num(v1.value) + " / " + num(v2.value) + " / " + num(v8.value));
    const Estimate a1 = mc_surface_area(set, det_cfg, 1);
    const Estimate a8 = mc_surface_area(set, det_cfg, 8);
    ck.check_true("determinism: area identical for 1/8 workers",
                  a1.value == a8.value, num(a1.value) + " / " + num(a8.value));
    const Estimate w1 = mc_mean_width(set, 20'000, seed, 1);
    const Estimate w8 = mc_mean_width(set, 20'000, seed, 8);
    ck.check_true("determinism: mean width identical for 1/8 workers",
                  w1.value == w8.value, num(w1.value) + " / " + num(w8.value));
  }

  // --- support function spot values and width bounds
  {
    const BallSet ball(std::vector<Sphere>{Sphere({0.0, 0.0, 0.0}, 1.0)});
    rng::SplitMix64 g(seed ^ 0x5u);
    double worst = 0.0;
    for (int i = 0; i < 5; ++i)
      worst = std::max(
          worst, std::abs(support_function(ball, Direction(g.unit_vector())) - 1.0));
    ck.check_true("support: unit ball gives 1 in every direction", worst <= 1e-10,
                  "worst deviation " + num(worst));
    const BallSet d = dihedron_balls();
    ck.check_abs("support: dihedron along the center axis",
                 support_function(d, Direction({1.0, 0.0, 0.0})), 0.5, 1e-9);
    ck.check_abs("support: dihedron across the edge plane",
                 support_function(d, Direction({0.0, 1.0, 0.0})),
                 std::sqrt(3.0) / 2.0, 1e-9);

    const BallSet tet = tetrahedron_balls();
    const double w_hi = std::sqrt(3.0) - 1.0 / std::sqrt(2.0);
    rng::SplitMix64 gw(seed ^ 0x77u);
    double w_min = 1e300, w_max = -1e300;
    for (int i = 0; i < 2000; ++i) {
      const Vec3 u = gw.unit_vector();
      const double w =
          support_function(tet, Direction(u)) + support_function(tet, Direction(-u));
      w_min = std::min(w_min, w);
      w_max = std::max(w_max, w);
    }
    ck.check_true("support: four-ball solid widths within [1, sqrt(3) - 1/sqrt(2)]",
                  w_min >= 1.0 - 1e-6 && w_max <= w_hi + 1e-6,
                  "sampled range [" + num(w_min) + ", " + num(w_max) + "]");
  }

  return ck.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Measures (volume, surface area, mean width) of intersections of balls "
      "and related constant-width bodies"};
  app.require_subcommand(1);

  MeasureArgs ma;
  double verify_tolerance = 1e-6;
  std::int64_t verify_samples = 10'000'000;
  std::uint64_t verify_seed = 42;
  bool mutate = false;
  std::string oq_solid, oq_format = "table";
  std::int64_t oq_samples = 10'000'000;
  std::uint64_t oq_seed = 42;
  std::string cu_input, cu_format = "table";
  std::int64_t cu_samples = 10'000'000;
  std::uint64_t cu_seed = 42;

  CLI::App* measure = app.add_subcommand("measure", "Measures of a named solid");
  measure->add_option("--solid", ma.solid, "Solid to measure")
      ->required()
      ->check(CLI::IsMember({"dihedron", "lens", "trihedron", "tetrahedron",
                             "meissner", "capped-cylinder", "segment", "cap-body",
                             "hexahedron", "dodecahedron", "custom"}));
  double phi_v = 0.0, delta_v = 0.0, ell_v = 0.0;
  auto* phi_opt = measure->add_option("--phi", phi_v,
                                      "Angular radius in [0, pi/2] (lens, segment, cap-body)");
  auto* delta_opt =
      measure->add_option("--delta", delta_v, "Center distance in [0, 2] (lens)");
  auto* ell_opt =
      measure->add_option("--ell", ell_v, "Cylinder length >= 0 (capped-cylinder)");
  measure->add_option("--input", ma.input, "Sphere-set JSON file (custom)");
  measure->add_option("--format", ma.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));
  measure->add_option("--samples", ma.samples, "Monte Carlo sample budget")
      ->check(CLI::PositiveNumber);
  measure->add_option("--seed", ma.seed, "Random seed")->envname("BALLM_SEED");

  CLI::App* verify = app.add_subcommand(
      "verify", "Cross-check every closed form against independent evaluations");
  verify->add_option("--tolerance", verify_tolerance,
                     "Relative tolerance for exact-vs-exact agreements");
  verify->add_option("--samples", verify_samples, "Monte Carlo sample budget")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_seed, "Random seed")->envname("BALLM_SEED");
  verify->add_flag("--mutate", mutate)->group("");  // hidden: fault-injection hook

  CLI::App* oq = app.add_subcommand(
      "open-question", "Numerical answers for the solids without closed forms");
  oq->add_option("--solid", oq_solid, "hexahedron or dodecahedron")
      ->required()
      ->check(CLI::IsMember({"hexahedron", "dodecahedron"}));
  oq->add_option("--format", oq_format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));
  oq->add_option("--samples", oq_samples, "Monte Carlo sample budget")
      ->check(CLI::PositiveNumber);
  oq->add_option("--seed", oq_seed, "Random seed")->envname("BALLM_SEED");

  CLI::App* custom =
      app.add_subcommand("custom", "Measures of a sphere set from a JSON file");
  custom->add_option("--input", cu_input, "Sphere-set JSON file")->required();
  custom->add_option("--format", cu_format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));
  custom->add_option("--samples", cu_samples, "Monte Carlo sample budget")
      ->check(CLI::PositiveNumber);
  custom->add_option("--seed", cu_seed, "Random seed")->envname("BALLM_SEED");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0; usage errors are domain errors
  }

  try {
    if (*measure) {
      if (phi_opt->count()) ma.phi = phi_v;
      if (delta_opt->count()) ma.delta = delta_v;
      if (ell_opt->count()) ma.ell = ell_v;
      return run_measure(ma);
    }
    if (*verify) return run_verify(verify_tolerance, verify_samples, verify_seed, mutate);
    if (*oq) return run_open_question(oq_solid, oq_format, oq_samples, oq_seed);
    if (*custom) return run_custom(cu_input, cu_format, cu_samples, cu_seed);
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
