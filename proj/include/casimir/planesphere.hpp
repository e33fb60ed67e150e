// Exact plane-sphere Casimir computation by multipole expansion.
//
// The free energy is kT sum_m' sum_{m-blocks} ln det D^(m)(i xi_m), where
// D^(m) = 1 - S^(m) and S^(m) is the symmetrized round-trip matrix over
// spherical waves (l, P) with l = max(1,|m|)..l_max and P in {E, M}:
//
//   S_{l1 P1, l2 P2} = sqrt(w_{l1 P1} w_{l2 P2}) N_{l1 m} N_{l2 m}
//       * (1 / 2 Lc kap) int_{y0}^inf dy e^{-y}
//            [ r_TM A1^TM A2^TM + |r_TE| A1^TE A2^TE ]
//
// with w_{lE} = |a_l|, w_{lM} = |b_l| (Mie magnitudes), kap = xi/hbar_c,
// y = 2 kappa Lc, y0 = 2 kap Lc, Lc = L + R the center-to-plate distance,
// x = kappa/kap = y/y0, and the angular factors
//   A^TM = tau_lm(x) for P = E,  pi_lm(x) for P = M
//   A^TE = pi_lm(x)  for P = E,  tau_lm(x) for P = M .
// The bracket is a sum of two Gram forms, so S^(m) is symmetric positive
// semi-definite and every m-block contributes ln det D <= 0.
//
// Contributions of +m and -m coincide (flipping the sign of the M-sector is
// a similarity), so only m >= 0 is computed, doubling m > 0.  The xi = 0
// Matsubara term uses the analytic zero-frequency limits of the plate
// reflection and of the rescaled Mie coefficients; polarizations decouple
// there.  Force and gradient come from the analytic Lc-derivatives of the
// e^{-2 kappa Lc} factors, evaluated with the same grids.

#pragma once

#include <utility>
#include <vector>

#include "casimir/materials.hpp"
#include "casimir/thermal.hpp"

namespace casimir {

struct PlaneSphereSpec {
  double L = 0.0; // closest approach, nm
  double R = 0.0; // sphere radius, nm
  DielectricModel sphere = DielectricModel::perfect_mirror();
  DielectricModel plate = DielectricModel::perfect_mirror();
  ThermalSpec thermal;
  int ell_max = 0;  // 0: ceil(12 R / L) clamped to [10, 255]
  int m_max = -1;   // < 0: automatic truncation
  int quad_level = 1;   // node density of the in-block y quadrature
  int xi_level = 1;     // node density of the T = 0 frequency quadrature
  double m_rel_tol = 1e-10;
  int workers = 0; // 0: hardware concurrency

  double center_distance() const { return L + R; }
  int effective_ell_max() const;
  void validate() const;
};

struct PlaneSphereDiagnostics {
  double matsubara_tail = 0.0;
  double ell_residual = 0.0; // change of the result when l_max drops by one
  int ell_max_used = 0;
  int m_max_used = 0;
  bool ell_max_warning = false; // l_max * L/R below the accuracy threshold
};

struct PlaneSphereResult {
  double free_energy = 0.0; // eV (energy when T = 0)
  double force = 0.0;       // eV/nm
  double gradient = 0.0;    // eV/nm^2
  PlaneSphereDiagnostics diag;
};

// Free energy, force and gradient in one pass.
PlaneSphereResult compute_ps(const PlaneSphereSpec& spec);

PlaneSphereResult free_energy_ps(const PlaneSphereSpec& spec); // alias of compute_ps
double force_ps(const PlaneSphereSpec& spec);
double gradient_ps(const PlaneSphereSpec& spec);

// One (m, xi) block: D = 1 - S and the Lc-derivative accumulators of S.
struct MultipoleBlock {
  int m = 0;
  double xi = 0.0;
  int lmin = 1, lmax = 1, dim = 0;
  std::vector<double> D;  // row-major, 1 - S
  std::vector<double> S1; // -dS/dLc   (positive matrix)
  std::vector<double> S2; // +d2S/dLc2 (positive matrix)

  double spectral_radius_bound() const; // max diagonal of S as a cheap proxy

  // ln det D plus its first and second Lc-derivatives; sub-block values
  // exclude l = lmax.  Throws NumericError if D is not positive definite.
  struct LogDet {
    double value = 0.0, d1 = 0.0, d2 = 0.0, value_sub = 0.0;
  };
  LogDet log_det() const;
};

MultipoleBlock translation_round_trip(int m, double xi_ev,
                                      const PlaneSphereSpec& spec);

// Large-separation l = 1 perfect-mirror free energy
//   -(3 hbar c R^3 / 4 lambda_T Lc^3) phi(nu),  nu = 2 pi Lc / lambda_T,
// with Lc = L + R (the scattering series depends on the center-to-plate
// distance; at R << L this is the published L-form).
double analytic_l1_perf(double L, double R, double T);

// Its entropy -dF/dT = (3 k_B R^3 / 4 Lc^3)(phi + nu phi'); negative for
// nu below about 1.5.
double entropy_l1_perf(double L, double R, double T);

// High-temperature large-distance asymptotics.
double plasma_high_T(double L, double R, double lambda_P, double T);
double drude_high_T(double L, double R, double T);

// F(L, T) / F(L, 0) at fixed geometry and materials.
double theta_ratio(const PlaneSphereSpec& spec);

// Cubic least-squares fit of rho(x) with the intercept pinned to 1;
// beta is the linear coefficient.
struct BetaFit {
  double beta = 0.0;
  double residual = 0.0;
  double condition = 0.0;
};
BetaFit beta_g_fit(const std::vector<std::pair<double, double>>& samples);

} // namespace casimir
