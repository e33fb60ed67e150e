// Second-order lateral Casimir coupling of sinusoidally corrugated plates.
//
// The first-order change of a plane reflection operator under a profile
// h(x) couples (k, p) to (k + q, p') with coefficient B_{p'p}(k', k) h~(q).
// For an interface between vacuum and eps (all quantities Wick-rotated,
// kap = xi/hbar_c, kt = kappa_t, subscript 0 = incoming side):
//
//   B_ss = -2 (eps-1) kap^2 kappa0 c / (Ds Ds0)
//   B_pp = +2 (eps-1) kappa0 [eps k k0 + kt kt0 c] / (Dp Dp0)
//   B_ps = -2 (eps-1) kap kappa0 kt  s / (Dp Ds0)
//   B_sp = -2 (eps-1) kap kappa0 kt0 s / (Ds Dp0)
//
// with Ds = kappa + kt, Dp = eps kappa + kt, c = cos of the angle between
// k and k0, s its sine.  The diagonal limit reproduces the uniform-shift
// identity B_pp(k,k) = 2 kappa r_p.  The response function couples the two
// first-order operators through the cavity:
//
//   G_C(k_C) = (1/2) kT sum' int d^2k/(2pi)^2
//              sum_{pp'} B^1_{pp'}(k,k+) B^2_{p'p}(k+,k)
//              e^{-(kappa + kappa+) L} / (d_p(k) d_p'(k+))
//
// (T = 0: (1/2) int dxi/2pi ...), normalised so that G_C(k_C -> 0) equals
// half the second L-derivative of the plane-plane free energy per area,
// and positive.  The lateral energy is
//   dE = -(A/2) G_C(k_C) a1 a2 cos(k_C b) ,
// minimal at b = 0 where the corrugations are aligned.

#pragma once

#include "casimir/materials.hpp"
#include "casimir/thermal.hpp"

namespace casimir {

struct CorrugationSpec {
  double L = 0.0;        // nm, mean separation
  double a1 = 0.0;       // nm
  double a2 = 0.0;       // nm
  double lambda_C = 0.0; // nm
  double b = 0.0;        // nm, crest mismatch
  double theta = 0.0;    // rad, relative rotation
  double Lx = 0.0;       // nm
  double Ly = 0.0;       // nm
  DielectricModel model = DielectricModel::perfect_mirror(); // both plates
  ThermalSpec thermal;

  double k_C() const;
  double area() const { return Lx * Ly; }
  // true when amplitudes exceed a tenth of the smallest length scale
  bool perturbative_warning() const;
  void validate() const;
};

// Spectral sensitivity G_C(k_C) > 0, eV/nm^4.
double response_function(double k_C, double L, const DielectricModel& model,
                         const ThermalSpec& thermal);

// PFA limit: G_C(0) = (1/2) |d^2 (F/A) / dL^2| from the plane-plane engine.
double pfa_response(double L, const DielectricModel& model,
                    const ThermalSpec& thermal);

double lateral_energy(const CorrugationSpec& spec); // eV
double lateral_force(const CorrugationSpec& spec);  // eV/nm, -d(dE)/db

// cos(k_C b) sinc(k_C theta Ly / 2) angular-average model for the rotated
// configuration; reduces to lateral_energy at theta = 0 and vanishes at
// theta = lambda_C / Ly.
double torque_energy(const CorrugationSpec& spec); // eV
double torque(const CorrugationSpec& spec);        // eV/rad, -d/dtheta

struct TorqueMax {
  double theta_star = 0.0; // rad
  double tau_star = 0.0;   // eV/rad
};
// maximum of |torque| over theta in (0, lambda_C / Ly) at b = 0
TorqueMax torque_max(const CorrugationSpec& spec);

} // namespace casimir
