// Physical constants and unit conventions.
//
// Internal units: lengths in nanometers, energies and imaginary frequencies
// in eV (a frequency xi is always carried as the energy hbar*xi).  Wavevectors
// are 1/nm, so xi/hbar_c converts an energy to a wavevector.

#pragma once

namespace casimir {

// hbar * c in eV nm
inline constexpr double hbar_c = 197.3269804;

// Boltzmann constant in eV / K
inline constexpr double k_boltzmann = 8.617333262e-5;

// SI conversions, applied only at the output layer
inline constexpr double ev_to_joule = 1.602176634e-19;        // 1 eV in J
inline constexpr double ev_per_nm_to_newton = 1.602176634e-10; // 1 eV/nm in N
inline constexpr double ev_per_nm2_to_newton_per_m = 1.602176634e-1;
inline constexpr double ev_per_nm3_to_pascal = 1.602176634e8;

inline constexpr double pi = 3.14159265358979323846;

// thermal wavelength hbar c / (k_B T), in nm
inline double thermal_wavelength(double T_kelvin) {
  return hbar_c / (k_boltzmann * T_kelvin);
}

// Matsubara energy xi_m = 2 pi m k_B T, in eV
inline double matsubara_xi(int m, double T_kelvin) {
  return 2.0 * pi * m * k_boltzmann * T_kelvin;
}

} // namespace casimir
