// Two mirrors on a line: the closed-loop function, Matsubara free energy,
// force, entropy, and the S-matrix determinant identity.  Serves as a fast,
// fully checkable model of the machinery used by the 3-d engines.

#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "casimir/thermal.hpp"

namespace casimir {

// Scalar mirror with a real reflection amplitude on the imaginary axis.
struct Mirror1D {
  std::function<double(double)> r; // r(xi), |r| <= 1
  double position = 0.0;           // nm

  static Mirror1D constant(double r_value);
  static Mirror1D perfect(); // r = 1
};

// d(i xi) = 1 - r1 r2 e^{-2 xi L / hbar_c}
double loop_function_1d(const Mirror1D& m1, const Mirror1D& m2, double xi_ev,
                        double L_nm);

// kT sum_m' ln d(i xi_m); T = 0 dispatches to (1/2pi) int dxi ln d.
// A resonant zero mode (r1 r2 -> 1 at xi = 0) would make the m = 0 term
// ln 0; that term is dropped, matching the limit r -> 1 taken after the sum.
double free_energy_1d(const Mirror1D& m1, const Mirror1D& m2, double L_nm,
                      const ThermalSpec& thermal);

// F = -dF/dL via the analytic derivative of ln d inside the same sums.
double force_1d(const Mirror1D& m1, const Mirror1D& m2, double L_nm,
                const ThermalSpec& thermal);

// Radiation-pressure route for constant lossless mirrors: vacuum part
// resummed to -(hbar c / 4 pi L^2) Li_2(r1 r2), thermal part integrated over
// real frequencies.  Validation path for force_1d.
double force_1d_radiation_pressure(double r1, double r2, double L_nm,
                                   const ThermalSpec& thermal);

// S = -dF/dT by central finite difference with step control.
double entropy_1d(const Mirror1D& m1, const Mirror1D& m2, double L_nm,
                  double T_kelvin);

// Unitary mirror at a real frequency: |r|^2 + |t|^2 = 1 with r t* + t r* = 0.
struct UnitaryMirror1D {
  std::complex<double> r, t;
  double position = 0.0; // nm
};

// max over the grid of |ln det S12 - ln det S1 - ln det S2 - ln(d*/d)|,
// with S12 composed from the two elementary matrices.
double det_identity_check(const UnitaryMirror1D& m1, const UnitaryMirror1D& m2,
                          const std::vector<double>& omega_grid_ev);

} // namespace casimir
