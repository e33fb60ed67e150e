// Run configuration: INI-style config parsing, sweep grids, CSV emission.
//
// Format: "key = value" lines grouped under [section] headers, '#' comments.
// Sections: [run], [geometry], [material], [material2], [thermal], [sweep].
// Unknown or duplicate keys are errors.  Exactly one sweep variable may be
// given; without a [sweep] section the run is the single configured point.

#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "casimir/materials.hpp"

namespace casimir {

enum class RunMode { OneDim, PlanePlane, PlaneSphere, Corrugation, Pfa };
enum class UnitSystem { Natural, SI };

struct SweepSpec {
  std::string variable; // L | R | T | lambda_C
  double from = 0.0;
  double to = 0.0;
  bool log_spacing = false;
  int count = 1;
  std::vector<double> grid() const;
};

struct RunConfig {
  RunMode mode = RunMode::PlanePlane;
  std::string out_path = "casimir.csv";
  int workers = 0; // 0: hardware default
  UnitSystem units = UnitSystem::Natural;
  double tolerance = 1e-9;

  // geometry (interpretation depends on mode)
  double L = 0.0, R = 0.0, area = 1.0;
  double a1 = 0.0, a2 = 0.0, lambda_C = 0.0, b = 0.0, theta = 0.0;
  double Lx = 0.0, Ly = 0.0;
  double h = 0.0, d = 0.0, d1 = 0.0;
  double r1 = 1.0, r2 = 1.0; // 1-d mirror amplitudes
  int ell_max = 0;           // 0: heuristic
  bool convergence_report = false;
  std::string pfa_kind = "plane-sphere"; // or "grating"

  DielectricModel material = DielectricModel::perfect_mirror();
  DielectricModel material2 = DielectricModel::perfect_mirror();
  bool has_material2 = false;

  std::vector<double> temperatures{0.0};
  std::optional<SweepSpec> sweep;
};

RunConfig parse_config(std::istream& in);
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

// Executes the configured run, writing the CSV to config.out_path.
// Returns 0 on success, 2 if any row failed to converge (partial CSV with
// failure markers).  Configuration errors throw before anything is written.
int run(const RunConfig& config);

} // namespace casimir
