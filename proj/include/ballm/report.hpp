// Result presentation: a typed report with per-value method tags, rendered as
// an aligned text table or a stable machine-readable JSON object.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ballm {

// Method tags used in reports; every printed value carries one of these.
inline constexpr const char* kMethodClosedForm = "closed-form";
inline constexpr const char* kMethodSkeleton = "skeleton";
inline constexpr const char* kMethodQuadrature = "quadrature";
inline constexpr const char* kMethodMonteCarlo = "monte-carlo";

struct Report {
  std::optional<double> volume;
  std::optional<double> surface_area;
  std::optional<double> mean_width;
  std::map<std::string, std::string> methods;  // value name -> method tag
  std::map<std::string, double> std_errors;    // value name -> standard error
  std::optional<double> lambda;                // adjacent vertex-to-vertex distance
  std::optional<double> vl_over_lambda3;
  bool empty = false;                       // intersection has no common point
  std::map<std::string, double> mc_values;  // independent Monte Carlo cross-check
  std::map<std::string, double> deltas_sigma;  // |value - mc| / std_error
  std::vector<std::string> notes;
};

// JSON object with keys volume / surface_area / mean_width / methods /
// std_errors / lambda / vl_over_lambda3 (plus mc, deltas_sigma, empty, notes
// when present); absent fields are omitted. Parsing the emitted string and
// re-dumping it reproduces the bytes exactly.
std::string to_json(const Report& r);

// Human-readable aligned table.
std::string to_table(const Report& r);

}  // namespace ballm
