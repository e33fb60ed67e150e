// Mirror optical response at imaginary frequency.
//
// Five parameterizations: perfect mirror, plasma, Drude, Drude-Lorentz and a
// tabulated eps(i xi).  Energies in eV throughout; eps is real and >= 1 on
// the imaginary axis for any passive model.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace casimir {

enum class MaterialKind { PerfectMirror, Plasma, Drude, DrudeLorentz, Tabulated };

// Optional low-frequency Drude extension for tabulated data.
struct DrudeTail {
  double omega_p; // eV
  double gamma;   // eV
};

class DielectricModel {
public:
  static DielectricModel perfect_mirror();
  static DielectricModel plasma(double omega_p_ev);
  static DielectricModel drude(double omega_p_ev, double gamma_ev);
  static DielectricModel drude_lorentz(double eps0, double eps_inf, double xi0_ev);
  static DielectricModel tabulated(std::vector<double> xi_ev,
                                   std::vector<double> eps,
                                   std::optional<DrudeTail> tail = std::nullopt);

  MaterialKind kind() const { return kind_; }

  // eps(i xi).  Drude at xi = 0 returns +infinity; callers needing the
  // zero-frequency physics must use the reflection limits instead.
  double eval_epsilon(double xi_ev) const;

  // sigma_0 = omega_p^2 / gamma for Drude; +infinity for plasma and perfect
  // mirrors.  Not defined for Drude-Lorentz or tabulated data.
  double static_conductivity() const;

  // 2 pi hbar_c / omega_p (plasma and Drude only)
  double plasma_wavelength() const;

  double omega_p() const { return omega_p_; }
  double gamma() const { return gamma_; }
  double eps0() const { return eps0_; }
  double eps_inf() const { return eps_inf_; }
  double xi0() const { return xi0_; }
  const std::optional<DrudeTail>& drude_tail() const { return tail_; }

  std::string describe() const;

private:
  DielectricModel() = default;
  MaterialKind kind_ = MaterialKind::PerfectMirror;
  double omega_p_ = 0.0, gamma_ = 0.0;
  double eps0_ = 0.0, eps_inf_ = 0.0, xi0_ = 0.0;
  std::vector<double> tab_xi_, tab_ln_xi_, tab_ln_em1_; // ln(eps - 1) on ln xi grid
  std::vector<double> tab_eps_;
  std::optional<DrudeTail> tail_;
};

// Parse a two-column table (xi in eV, eps dimensionless, '#' comments).
DielectricModel load_table(std::istream& in,
                           std::optional<DrudeTail> tail = std::nullopt);
DielectricModel load_table_file(const std::string& path,
                                std::optional<DrudeTail> tail = std::nullopt);

} // namespace casimir
