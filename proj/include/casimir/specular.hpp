// Wick-rotated kinematics and Fresnel amplitudes for a plane interface.
//
// kappa   = sqrt(k^2 + (xi/hbar_c)^2)        vacuum longitudinal wavevector
// kappa_t = sqrt(k^2 + eps (xi/hbar_c)^2)    same inside the medium
// r_TE    = (kappa - kappa_t)/(kappa + kappa_t)
// r_TM    = (eps kappa - kappa_t)/(eps kappa + kappa_t)
//
// On the imaginary axis both amplitudes are real, with -1 <= r_TE <= 0 and
// 0 <= r_TM <= 1 for eps >= 1.

#pragma once

#include "casimir/materials.hpp"

namespace casimir {

struct ReflectionPair {
  double te = 0.0;
  double tm = 0.0;
};

enum class Polarization { TE, TM };

struct ScatteringParams {
  double xi = 0.0; // eV, >= 0
  double k = 0.0;  // 1/nm, >= 0
  Polarization p = Polarization::TE;
};

double kappa(double xi_ev, double k);
double kappa_medium(double xi_ev, double k, double eps);

// Fresnel pair for a given eps >= 1; (xi, k) = (0, 0) is rejected.
ReflectionPair fresnel(double xi_ev, double k, double eps);

// Fresnel pair for a model, dispatching perfect mirrors to (-1, +1).
ReflectionPair reflection(const DielectricModel& model, double xi_ev, double k);

// Analytic xi -> 0+ limit at fixed k > 0.  Distinguishes Drude (TE -> 0)
// from plasma (TE finite) mirrors.
ReflectionPair zero_frequency_reflection(const DielectricModel& model, double k);

} // namespace casimir
