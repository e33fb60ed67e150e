// Proximity-force (Derjaguin) baselines and the rho ratios that quantify
// beyond-PFA physics.

#pragma once

#include "casimir/materials.hpp"
#include "casimir/thermal.hpp"

namespace casimir {

struct PfaPlaneSphere {
  double energy = 0.0;   // eV:     2 pi R  int_L^inf (F_pp/A)(L') dL'
  double force = 0.0;    // eV/nm:  2 pi R  (F_pp/A)(L)
  double gradient = 0.0; // eV/nm^2: 2 pi R (per-area force)(L), = -dF/dL
};

// spec: plate-sphere materials and thermal state shared with the exact
// engine; warns through the return flag when R < 10 L.
struct PfaPlaneSphereResult {
  PfaPlaneSphere value;
  bool curvature_warning = false;
};

PfaPlaneSphereResult pfa_plane_sphere(double L, double R,
                                      const DielectricModel& sphere,
                                      const DielectricModel& plate,
                                      const ThermalSpec& thermal);

struct PfaGratingSpec {
  double L = 0.0;  // nm, plateau-to-plateau separation
  double h = 0.0;  // nm, depth
  double d = 0.0;  // nm, period
  double d1 = 0.0; // nm, ridge width
  DielectricModel model1 = DielectricModel::perfect_mirror();
  DielectricModel model2 = DielectricModel::perfect_mirror();
  void validate() const;
};

// (d1/d) F_pp(L - 2h) + (1 - d1/d) F_pp(L), per unit area; independent of d
// at fixed filling fraction.
double pfa_grating(const PfaGratingSpec& spec, const ThermalSpec& thermal);

// Plain quotient with a sign guard: both inputs must carry the same sign.
double rho_ratio(double exact, double pfa);

} // namespace casimir
