// Temperature, Matsubara grid and truncation policy.

#pragma once

#include <cmath>
#include <functional>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

struct ThermalSpec {
  double T = 0.0;            // kelvin; T = 0 selects the xi-integral path
  double tolerance = 1e-10;  // relative tail tolerance of the Matsubara sum
  int max_terms = 100000;

  ThermalSpec() = default;
  explicit ThermalSpec(double T_kelvin, double tol = 1e-10, int max_n = 100000)
      : T(T_kelvin), tolerance(tol), max_terms(max_n) {
    if (T < 0.0) throw DomainError("ThermalSpec: T must be >= 0");
    if (!(tolerance > 0.0)) throw DomainError("ThermalSpec: tolerance must be > 0");
  }

  double xi(int m) const { return matsubara_xi(m, T); }

  // mean photon number per mode at real frequency omega (energy in eV),
  // including the vacuum 1/2:  N = 1/2 coth(omega / 2 k_B T)
  double planck_occupation(double omega_ev) const {
    if (!(omega_ev > 0.0)) throw DomainError("planck_occupation: omega must be > 0");
    if (T == 0.0) return 0.5;
    return 0.5 / std::tanh(0.5 * omega_ev / (k_boltzmann * T));
  }
};

struct MatsubaraSum {
  double value = 0.0;
  double tail_estimate = 0.0;
  int terms = 0;
};

// kT [ f(0)/2 + sum_{m>=1} f(xi_m) ], truncated when |f| stays below
// tol * |partial sum| for three consecutive terms.  The tail estimate is a
// geometric extrapolation of the last term.
MatsubaraSum matsubara_sum(const ThermalSpec& thermal,
                           const std::function<double(double)>& f_of_xi,
                           const std::function<double()>& zero_term);

} // namespace casimir
