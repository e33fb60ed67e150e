// Lifshitz engine for two parallel plates: Casimir free energy, zero-T
// energy, force, force gradient, entropy and reduction factors, all per unit
// area (eV/nm^2 family) with totals available through the plate area.
//
// Free energy per area:
//   F/A = kT sum_m' (1/2pi) int k dk sum_p ln(1 - r1p r2p e^{-2 kappa L})
// evaluated on the y = 2 kappa L grid where the kernel is e^{-y}.  The force
// and gradient use the analytic L-derivatives of the same integrand.

#pragma once

#include "casimir/materials.hpp"
#include "casimir/thermal.hpp"

namespace casimir {

struct PlanePlaneSpec {
  double L = 0.0;     // nm
  double area = 1.0;  // nm^2, reporting only
  DielectricModel model1 = DielectricModel::perfect_mirror();
  DielectricModel model2 = DielectricModel::perfect_mirror();
  ThermalSpec thermal;
  double quad_rel_tol = 1e-9;

  void validate() const;
};

struct PlanePlaneResult {
  double free_energy_per_area = 0.0; // eV/nm^2 (energy at T = 0)
  double matsubara_tail = 0.0;
  double quad_error = 0.0;
};

// kT Matsubara sum (T > 0) or the zero-temperature xi-integral (T = 0).
PlanePlaneResult free_energy_pp(const PlanePlaneSpec& spec);

// Zero-temperature energy per area regardless of spec.thermal.
double energy_pp_T0(const PlanePlaneSpec& spec);

double force_pp(const PlanePlaneSpec& spec);    // eV/nm per nm^2 (i.e. eV/nm^3)
double gradient_pp(const PlanePlaneSpec& spec); // eV/nm^4
double entropy_pp(const PlanePlaneSpec& spec);  // eV/(K nm^2)

// eta = F / F_perfect at the same (L, T); 1 for perfect mirrors.
double reduction_factor(const PlanePlaneSpec& spec);

} // namespace casimir
