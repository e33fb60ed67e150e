#include "casimir/planeplane.hpp"

#include <cmath>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/specular.hpp"

namespace casimir {

void PlanePlaneSpec::validate() const {
  if (!(L > 0.0)) throw DomainError("PlanePlaneSpec: L must be > 0");
  if (!(area > 0.0)) throw DomainError("PlanePlaneSpec: area must be > 0");
}

namespace {

// Which power of y multiplies the radial kernel:
//   order 0: ln(1 - rho e^{-y})                    (free energy)
//   order 1: y   rho e^{-y} / d                    (force)
//   order 2: y^2 rho e^{-y} / d^2                  (gradient)
struct RadialIntegrand {
  const PlanePlaneSpec& spec;
  int order;
  double xi; // eV; xi = 0 uses the analytic zero-frequency reflections

  double operator()(double y) const {
    double kap = 0.5 * y / spec.L;
    double kmin = xi / hbar_c;
    double k2 = (kap - kmin) * (kap + kmin);
    if (k2 <= 0.0) return 0.0;
    double k = std::sqrt(k2);
    ReflectionPair r1, r2;
    if (xi == 0.0) {
      r1 = zero_frequency_reflection(spec.model1, k);
      r2 = zero_frequency_reflection(spec.model2, k);
    } else {
      r1 = reflection(spec.model1, xi, k);
      r2 = reflection(spec.model2, xi, k);
    }
    double e = std::exp(-y);
    double out = 0.0;
    for (double rho : {r1.te * r2.te, r1.tm * r2.tm}) {
      if (rho == 0.0) continue;
      double t = rho * e;
      switch (order) {
        case 0: out += std::log1p(-t); break;
        case 1: out += y * t / (1.0 - t); break;
        case 2: out += y * y * t / ((1.0 - t) * (1.0 - t)); break;
      }
    }
    return out;
  }
};

// int_{2 xi L / hbar_c}^inf y^order' ... dy  for one Matsubara frequency
double radial_integral(const PlanePlaneSpec& spec, double xi, int order,
                       double* err = nullptr) {
  RadialIntegrand f{spec, order, xi};
  double y0 = 2.0 * xi * spec.L / hbar_c;
  // the k dk measure contributes one power of y at every order
  auto g = [&](double y) { return f(y) * y; };
  auto res = integrate_to_infinity(g, y0, 10.0, spec.quad_rel_tol);
  if (!res.converged)
    throw ConvergenceError("plane-plane radial quadrature did not converge",
                           res.error);
  if (err) *err = res.error;
  return res.value;
}

} // namespace

// Below this ratio of thermal wavelength to gap the Matsubara grid is so
// dense that the sum is the T = 0 integral to well below the quadrature
// tolerance, at a term count the summation budget cannot afford.
static bool effectively_zero_T(const PlanePlaneSpec& spec) {
  return spec.thermal.T > 0.0 &&
         thermal_wavelength(spec.thermal.T) > 2.0e3 * spec.L;
}

PlanePlaneResult free_energy_pp(const PlanePlaneSpec& spec) {
  spec.validate();
  PlanePlaneResult out;
  double pref = 1.0 / (8.0 * pi * spec.L * spec.L);
  if (spec.thermal.T == 0.0 || effectively_zero_T(spec)) {
    out.free_energy_per_area = energy_pp_T0(spec);
    return out;
  }
  double qerr = 0.0;
  auto sum = matsubara_sum(
      spec.thermal,
      [&](double xi) {
        double e;
        double v = radial_integral(spec, xi, 0, &e);
        qerr += e;
        return v;
      },
      [&]() { return radial_integral(spec, 0.0, 0); });
  out.free_energy_per_area = pref * sum.value;
  out.matsubara_tail = pref * sum.tail_estimate;
  out.quad_error = pref * k_boltzmann * spec.thermal.T * qerr;
  return out;
}

double energy_pp_T0(const PlanePlaneSpec& spec) {
  spec.validate();
  // E/A = (hbar c / 32 pi^2 L^3) int_0^inf du int_u^inf y dy sum_p ln d
  // with u = 2 xi L / hbar_c.  The outer integral is adaptive over the
  // inner adaptive radial integral.
  auto outer = [&](double u) {
    double xi = 0.5 * u * hbar_c / spec.L;
    return radial_integral(spec, xi, 0);
  };
  auto res = integrate_to_infinity(outer, 0.0, 8.0, spec.quad_rel_tol);
  return hbar_c / (32.0 * pi * pi * std::pow(spec.L, 3)) * res.value;
}

double force_pp(const PlanePlaneSpec& spec) {
  spec.validate();
  double prefL = 1.0 / (8.0 * pi * std::pow(spec.L, 3));
  if (spec.thermal.T == 0.0 || effectively_zero_T(spec)) {
    auto outer = [&](double u) {
      double xi = 0.5 * u * hbar_c / spec.L;
      return radial_integral(spec, xi, 1);
    };
    auto res = integrate_to_infinity(outer, 0.0, 8.0, spec.quad_rel_tol);
    return -hbar_c / (32.0 * pi * pi * std::pow(spec.L, 4)) * res.value;
  }
  auto sum = matsubara_sum(
      spec.thermal, [&](double xi) { return radial_integral(spec, xi, 1); },
      [&]() { return radial_integral(spec, 0.0, 1); });
  return -prefL * sum.value;
}

double gradient_pp(const PlanePlaneSpec& spec) {
  spec.validate();
  if (spec.thermal.T == 0.0 || effectively_zero_T(spec)) {
    auto outer = [&](double u) {
      double xi = 0.5 * u * hbar_c / spec.L;
      return radial_integral(spec, xi, 2);
    };
    auto res = integrate_to_infinity(outer, 0.0, 8.0, spec.quad_rel_tol);
    return -hbar_c / (32.0 * pi * pi * std::pow(spec.L, 5)) * res.value;
  }
  auto sum = matsubara_sum(
      spec.thermal, [&](double xi) { return radial_integral(spec, xi, 2); },
      [&]() { return radial_integral(spec, 0.0, 2); });
  return -sum.value / (8.0 * pi * std::pow(spec.L, 4));
}

double entropy_pp(const PlanePlaneSpec& spec) {
  spec.validate();
  if (!(spec.thermal.T > 0.0)) throw DomainError("entropy_pp: T must be > 0");
  auto F = [&](double T) {
    PlanePlaneSpec s = spec;
    s.thermal.T = T;
    return free_energy_pp(s).free_energy_per_area;
  };
  double T = spec.thermal.T;
  double h = 1e-3 * T;
  auto central = [&](double step) { return -(F(T + step) - F(T - step)) / (2.0 * step); };
  double s1 = central(h), s2 = central(0.5 * h);
  return (4.0 * s2 - s1) / 3.0; // one Richardson step
}

double reduction_factor(const PlanePlaneSpec& spec) {
  spec.validate();
  if (spec.model1.kind() == MaterialKind::PerfectMirror &&
      spec.model2.kind() == MaterialKind::PerfectMirror)
    return 1.0;
  PlanePlaneSpec ideal = spec;
  ideal.model1 = DielectricModel::perfect_mirror();
  ideal.model2 = DielectricModel::perfect_mirror();
  double e = free_energy_pp(spec).free_energy_per_area;
  double e0 = free_energy_pp(ideal).free_energy_per_area;
  return e / e0;
}

} // namespace casimir
