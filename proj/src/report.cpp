#include "ballm/report.hpp"

#include <cstdio>

#include "json.hpp"

namespace ballm {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

void row(std::string& out, const std::string& name, const std::string& value,
         const std::string& method, const std::string& extra) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-16s %-22s %-12s %s\n", name.c_str(),
                value.c_str(), method.c_str(), extra.c_str());
  out += buf;
}

}  // namespace

std::string to_json(const Report& r) {
  nlohmann::json j;
  if (r.volume) j["volume"] = *r.volume;
  if (r.surface_area) j["surface_area"] = *r.surface_area;
  if (r.mean_width) j["mean_width"] = *r.mean_width;
  if (!r.methods.empty()) j["methods"] = r.methods;
  if (!r.std_errors.empty()) j["std_errors"] = r.std_errors;
  if (r.lambda) j["lambda"] = *r.lambda;
  if (r.vl_over_lambda3) j["vl_over_lambda3"] = *r.vl_over_lambda3;
  if (r.empty) j["empty"] = true;
  if (!r.mc_values.empty()) j["mc"] = r.mc_values;
  if (!r.deltas_sigma.empty()) j["deltas_sigma"] = r.deltas_sigma;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j.dump(2) + "\n";
}

std::string to_table(const Report& r) {
  std::string out;
  row(out, "measure", "value", "method", "std-error");
  auto method_of = [&](const char* k) {
    const auto it = r.methods.find(k);
    return it == r.methods.end() ? std::string("-") : it->second;
  };
  auto sigma_of = [&](const char* k) {
    const auto it = r.std_errors.find(k);
    return it == r.std_errors.end() ? std::string() : num(it->second);
  };
  if (r.volume) row(out, "volume", num(*r.volume), method_of("volume"), sigma_of("volume"));
  if (r.surface_area)
    row(out, "surface_area", num(*r.surface_area), method_of("surface_area"),
        sigma_of("surface_area"));
  if (r.mean_width)
    row(out, "mean_width", num(*r.mean_width), method_of("mean_width"),
        sigma_of("mean_width"));
  if (r.lambda)
    row(out, "lambda", num(*r.lambda), "skeleton",
        "(adjacent vertex-to-vertex distance)");
  if (r.vl_over_lambda3) row(out, "vl_over_lambda3", num(*r.vl_over_lambda3), "-", "");
  for (const auto& [name, value] : r.mc_values) {
    std::string extra;
    const auto d = r.deltas_sigma.find(name);
    if (d != r.deltas_sigma.end()) extra = "delta/sigma = " + num(d->second);
    row(out, "mc " + name, num(value), kMethodMonteCarlo, extra);
  }
  if (r.empty) out += "empty intersection: all measures are zero\n";
  for (const std::string& n : r.notes) out += "note: " + n + "\n";
  return out;
}

}  // namespace ballm
