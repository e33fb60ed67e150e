#include "casimir/onedim.hpp"

#include <cmath>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/special.hpp"

namespace casimir {

Mirror1D Mirror1D::constant(double r_value) {
  if (std::abs(r_value) > 1.0)
    throw DomainError("Mirror1D: |r| must be <= 1");
  Mirror1D m;
  m.r = [r_value](double) { return r_value; };
  return m;
}

Mirror1D Mirror1D::perfect() { return constant(1.0); }

double loop_function_1d(const Mirror1D& m1, const Mirror1D& m2, double xi_ev,
                        double L_nm) {
  if (xi_ev < 0.0) throw DomainError("loop_function_1d: xi must be >= 0");
  if (!(L_nm > 0.0)) throw DomainError("loop_function_1d: L must be > 0");
  return 1.0 - m1.r(xi_ev) * m2.r(xi_ev) * std::exp(-2.0 * xi_ev * L_nm / hbar_c);
}

static double zero_mode_log(const Mirror1D& m1, const Mirror1D& m2) {
  double rho0 = m1.r(0.0) * m2.r(0.0);
  if (rho0 > 1.0 - 1e-12) return 0.0; // resonant zero mode dropped
  return std::log(1.0 - rho0);
}

double free_energy_1d(const Mirror1D& m1, const Mirror1D& m2, double L_nm,
                      const ThermalSpec& thermal) {
  if (!(L_nm > 0.0)) throw DomainError("free_energy_1d: L must be > 0");
  // grids denser than ~3e4 terms per decay length are summed as the integral
  bool dense = thermal.T > 0.0 && thermal_wavelength(thermal.T) > 3.0e4 * L_nm;
  if (thermal.T == 0.0 || dense) {
    // E = (1/2pi) int_0^inf dxi ln d = (hbar c / 4 pi L) int_0^inf du ln d(u)
    // with u = 2 xi L / hbar_c.  The u -> 0 end is integrated on a log grid
    // to absorb the ln u behaviour of resonant mirrors.
    auto lnd = [&](double u) {
      double xi = 0.5 * u * hbar_c / L_nm;
      return std::log(1.0 - m1.r(xi) * m2.r(xi) * std::exp(-u));
    };
    auto low = integrate_adaptive(
        [&](double t) { double u = std::exp(t); return lnd(u) * u; },
        std::log(1e-14), std::log(0.5), 1e-11);
    auto high = integrate_to_infinity(lnd, 0.5, 8.0, 1e-11);
    return hbar_c / (4.0 * pi * L_nm) * (low.value + high.value);
  }
  auto sum = matsubara_sum(
      thermal,
      [&](double xi) {
        return std::log(1.0 - m1.r(xi) * m2.r(xi) * std::exp(-2.0 * xi * L_nm / hbar_c));
      },
      [&]() { return zero_mode_log(m1, m2); });
  return sum.value;
}

double force_1d(const Mirror1D& m1, const Mirror1D& m2, double L_nm,
                const ThermalSpec& thermal) {
  if (!(L_nm > 0.0)) throw DomainError("force_1d: L must be > 0");
  bool dense = thermal.T > 0.0 && thermal_wavelength(thermal.T) > 3.0e4 * L_nm;
  // d ln d / dL = rho (2 xi / hbar_c) e^{-2 xi L / hbar_c} / d
  auto dlnd_dL = [&](double xi) {
    double rho = m1.r(xi) * m2.r(xi);
    double e = std::exp(-2.0 * xi * L_nm / hbar_c);
    return rho * (2.0 * xi / hbar_c) * e / (1.0 - rho * e);
  };
  if (thermal.T == 0.0 || dense) {
    auto f = [&](double u) {
      double xi = 0.5 * u * hbar_c / L_nm;
      double rho = m1.r(xi) * m2.r(xi);
      double e = std::exp(-u);
      return u * rho * e / (1.0 - rho * e);
    };
    auto res = integrate_to_infinity(f, 0.0, 8.0, 1e-11);
    return -hbar_c / (4.0 * pi * L_nm * L_nm) * res.value;
  }
  auto sum = matsubara_sum(thermal, dlnd_dL, [&]() {
    double rho0 = m1.r(0.0) * m2.r(0.0);
    // xi -> 0 limit of the summand: 1/L for a resonant zero mode, else 0
    return (rho0 > 1.0 - 1e-12) ? 1.0 / L_nm : 0.0;
  });
  return -sum.value;
}

double force_1d_radiation_pressure(double r1, double r2, double L_nm,
                                   const ThermalSpec& thermal) {
  double rho = r1 * r2;
  if (rho < 0.0 || rho >= 1.0)
    throw DomainError("force_1d_radiation_pressure: need 0 <= r1 r2 < 1");
  // vacuum part resummed over round trips: -(hbar c / 4 pi L^2) Li_2(rho)
  double f_vac = -hbar_c / (4.0 * pi * L_nm * L_nm) * dilog(rho);
  if (thermal.T == 0.0) return f_vac;
  // thermal part, using
  //   int_0^inf x cos(bx)/(e^x - 1) dx = 1/(2 b^2) - (pi^2/2)/sinh^2(pi b)
  double kT = k_boltzmann * thermal.T;
  double sum = 0.0, rn = 1.0;
  for (int n = 1; n <= 2000; ++n) {
    rn *= rho;
    double b = 2.0 * n * L_nm * kT / hbar_c;
    double sh = (pi * b < 350.0) ? pi * pi / (2.0 * std::sinh(pi * b) * std::sinh(pi * b)) : 0.0;
    double integral = 0.5 / (b * b) - sh;
    double term = rn * integral;
    sum += term;
    if (std::abs(term) < 1e-16 * std::abs(sum)) break;
  }
  double f_th = 2.0 * kT * kT / (pi * hbar_c) * sum;
  return f_vac + f_th;
}

double entropy_1d(const Mirror1D& m1, const Mirror1D& m2, double L_nm,
                  double T_kelvin) {
  if (!(T_kelvin > 0.0)) throw DomainError("entropy_1d: T must be > 0");
  double h = 1e-3 * T_kelvin;
  if (T_kelvin - 2.0 * h <= 0.0) throw DomainError("entropy_1d: step underflow");
  auto F = [&](double T) {
    return free_energy_1d(m1, m2, L_nm, ThermalSpec(T));
  };
  auto central = [&](double step) {
    return -(F(T_kelvin + step) - F(T_kelvin - step)) / (2.0 * step);
  };
  double s1 = central(h), s2 = central(0.5 * h);
  return (4.0 * s2 - s1) / 3.0;
}

static void require_unitary(const UnitaryMirror1D& m) {
  double norm = std::norm(m.r) + std::norm(m.t);
  std::complex<double> cross = m.r * std::conj(m.t) + m.t * std::conj(m.r);
  if (std::abs(norm - 1.0) > 1e-10 || std::abs(cross) > 1e-10)
    throw DomainError("det_identity_check: mirror S-matrix is not unitary");
}

double det_identity_check(const UnitaryMirror1D& m1, const UnitaryMirror1D& m2,
                          const std::vector<double>& omega_grid_ev) {
  require_unitary(m1);
  require_unitary(m2);
  using C = std::complex<double>;
  const C I(0.0, 1.0);
  double worst = 0.0;
  double L = m2.position - m1.position;
  if (!(L > 0.0)) throw DomainError("det_identity_check: need q2 > q1");
  for (double w : omega_grid_ev) {
    C ph1 = std::exp(2.0 * I * w * m1.position / hbar_c);
    C ph2 = std::exp(2.0 * I * w * m2.position / hbar_c);
    C d = 1.0 - m1.r * m2.r * std::exp(2.0 * I * w * L / hbar_c);
    // compose the cavity S-matrix from internal round trips
    C s11 = m1.t * m2.t / d;
    C s22 = s11;
    C s12 = m2.r / ph2 + m2.t * m2.t * (m1.r / ph1) / d;
    C s21 = m1.r * ph1 + m1.t * m1.t * m2.r * ph2 / d;
    C det12 = s11 * s22 - s12 * s21;
    C det1 = m1.t * m1.t - m1.r * m1.r;
    C det2 = m2.t * m2.t - m2.r * m2.r;
    C ratio = det12 / (det1 * det2 * (std::conj(d) / d));
    worst = std::max(worst, std::abs(std::log(ratio)));
  }
  return worst;
}

} // namespace casimir
