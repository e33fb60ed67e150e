#include "casimir/corrugation.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/planeplane.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/specular.hpp"

namespace casimir {

double CorrugationSpec::k_C() const {
  if (!(lambda_C > 0.0)) throw DomainError("CorrugationSpec: lambda_C must be > 0");
  return 2.0 * pi / lambda_C;
}

static double min_scale(const CorrugationSpec& s) {
  double m = std::min(s.lambda_C, s.L);
  if (s.model.kind() == MaterialKind::Plasma || s.model.kind() == MaterialKind::Drude)
    m = std::min(m, s.model.plasma_wavelength());
  return m;
}

bool CorrugationSpec::perturbative_warning() const {
  return std::max(a1, a2) > 0.1 * min_scale(*this);
}

void CorrugationSpec::validate() const {
  if (!(L > 0.0)) throw DomainError("CorrugationSpec: L must be > 0");
  if (!(lambda_C > 0.0)) throw DomainError("CorrugationSpec: lambda_C must be > 0");
  if (a1 < 0.0 || a2 < 0.0) throw DomainError("CorrugationSpec: amplitudes must be >= 0");
  if (!(Lx > 0.0) || !(Ly > 0.0))
    throw DomainError("CorrugationSpec: corrugated area must be positive");
  if (std::max(a1, a2) > 0.2 * min_scale(*this))
    throw DomainError("CorrugationSpec: amplitudes outside the perturbative window "
                      "(a < 0.2 min(lambda_C, lambda_P, L))");
  if (std::abs(theta) > 0.1)
    throw DomainError("CorrugationSpec: |theta| must be < 0.1 rad");
}

namespace {

struct Kernels {
  double ss = 0.0, pp = 0.0, ps = 0.0, sp = 0.0; // out <- in: s=TE, p=TM
};

// Interface parameters with every xi -> 0 and eps -> inf limit taken
// analytically: q2 = (eps-1) kap^2 and eps_inv = 1/eps stay finite.
struct InterfaceParams {
  double q2 = 0.0;
  double eps_inv = 0.0;
  bool pec = false;
};

InterfaceParams interface_params(const DielectricModel& model, double xi) {
  InterfaceParams p;
  if (model.kind() == MaterialKind::PerfectMirror) {
    p.pec = true;
    return p;
  }
  double kap = xi / hbar_c;
  if (xi > 0.0) {
    double eps = model.eval_epsilon(xi);
    p.q2 = (eps - 1.0) * kap * kap;
    p.eps_inv = 1.0 / eps;
    return p;
  }
  switch (model.kind()) {
    case MaterialKind::Plasma: {
      double kp = model.omega_p() / hbar_c;
      p.q2 = kp * kp;
      p.eps_inv = 0.0;
      break;
    }
    case MaterialKind::Drude:
      p.q2 = 0.0;
      p.eps_inv = 0.0;
      break;
    case MaterialKind::DrudeLorentz:
      p.q2 = 0.0;
      p.eps_inv = 1.0 / model.eps0();
      break;
    case MaterialKind::Tabulated:
      if (!model.drude_tail())
        throw DomainError("corrugation: tabulated model has no xi -> 0 limit");
      p.q2 = 0.0;
      p.eps_inv = 0.0;
      break;
    default:
      break;
  }
  return p;
}

// First-order reflection kernels for out = k, in = k0; c and s are the
// cosine and sine of the enclosed angle.
Kernels first_order_kernels(const InterfaceParams& p, double kap, double k,
                            double k0, double c, double s) {
  Kernels out;
  double kappa = std::hypot(k, kap), kappa0 = std::hypot(k0, kap);
  if (p.pec) {
    out.ss = -2.0 * kappa0 * c;
    out.pp = 2.0 * (k * k0 + kap * kap * c) / kappa;
    out.ps = -2.0 * kap * kappa0 * s / kappa;
    out.sp = -2.0 * kap * s;
    return out;
  }
  double kt = std::sqrt(kappa * kappa + p.q2);
  double kt0 = std::sqrt(kappa0 * kappa0 + p.q2);
  double Ds = kappa + kt, Ds0 = kappa0 + kt0;
  // p-denominators divided by eps: Dp/eps = kappa + eps_inv kt
  double dp = kappa + p.eps_inv * kt, dp0 = kappa0 + p.eps_inv * kt0;
  double fac = 1.0 - p.eps_inv; // (eps-1)/eps
  out.ss = -2.0 * p.q2 * kappa0 * c / (Ds * Ds0);
  out.pp = 2.0 * fac * kappa0 * (k * k0 + p.eps_inv * kt * kt0 * c) / (dp * dp0);
  // (eps-1) kap / Dp = fac * kap / dp
  out.ps = -2.0 * fac * kap * kappa0 * kt * s / (dp * Ds0);
  out.sp = -2.0 * fac * kap * kappa0 * kt0 * s / (Ds * dp0);
  return out;
}

// polarization-summed integrand of the response trace at one (xi, k, phi)
double response_integrand(const DielectricModel& model,
                          const InterfaceParams& p, double xi, double L,
                          double kC, double k, double phi) {
  double kap = xi / hbar_c;
  double kx = k * std::cos(phi) + kC, ky = k * std::sin(phi);
  double kplus = std::hypot(kx, ky);
  if (kplus == 0.0 || k == 0.0) return 0.0;
  double c = (k + kC * std::cos(phi)) / kplus; // k^ . k+^
  double s = kC * std::sin(phi) / kplus;       // enclosed-angle sine
  double kappa = std::hypot(k, kap), kappap = std::hypot(kplus, kap);

  ReflectionPair r = (xi > 0.0) ? reflection(model, xi, k)
                                : zero_frequency_reflection(model, k);
  ReflectionPair rp = (xi > 0.0) ? reflection(model, xi, kplus)
                                 : zero_frequency_reflection(model, kplus);
  double e = std::exp(-2.0 * kappa * L), ep = std::exp(-2.0 * kappap * L);
  double ds = 1.0 - r.te * r.te * e, dp = 1.0 - r.tm * r.tm * e;
  double dsp = 1.0 - rp.te * rp.te * ep, dpp = 1.0 - rp.tm * rp.tm * ep;

  Kernels K1 = first_order_kernels(p, kap, k, kplus, c, s);
  // plate 2 is the mirror image: its cross kernels flip sign, which at the
  // (k+, k) arguments cancels the sign flip of the geometric sine
  Kernels K2 = first_order_kernels(p, kap, kplus, k, c, s);

  double prop = std::exp(-(kappa + kappap) * L);
  double out = 0.0;
  out += K1.ss * K2.ss * prop / (ds * dsp); // TE loop
  out += K1.pp * K2.pp * prop / (dp * dpp); // TM loop
  out += K1.ps * K2.sp * prop / (dp * dsp); // TM <- TE <- TM
  out += K1.sp * K2.ps * prop / (ds * dpp); // TE <- TM <- TE
  return out;
}

// 2-d k-integral at one frequency
double response_at_xi(const DielectricModel& model, double xi, double L,
                      double kC) {
  InterfaceParams p = interface_params(model, xi);
  const GaussRule& phi_rule = gauss_legendre(24);
  auto over_k = [&](double k) {
    double acc = 0.0;
    for (size_t i = 0; i < phi_rule.x.size(); ++i) {
      double phi = 0.5 * pi * (phi_rule.x[i] + 1.0); // (0, pi); even in phi
      acc += 0.5 * pi * phi_rule.w[i] *
             response_integrand(model, p, xi, L, kC, k, phi);
    }
    return 2.0 * acc * k / (4.0 * pi * pi);
  };
  auto res = integrate_to_infinity(over_k, 0.0, 2.0 / L, 1e-8);
  if (!res.converged)
    throw ConvergenceError("corrugation: k quadrature did not converge", res.error);
  return res.value;
}

} // namespace

double response_function(double k_C, double L, const DielectricModel& model,
                         const ThermalSpec& thermal) {
  if (k_C < 0.0) throw DomainError("response_function: k_C must be >= 0");
  if (!(L > 0.0)) throw DomainError("response_function: L must be > 0");
  if (thermal.T == 0.0) {
    auto f = [&](double xi) { return response_at_xi(model, xi, L, k_C); };
    auto res = integrate_to_infinity(f, 0.0, 2.0 * hbar_c / L, 1e-7);
    return 0.5 * res.value / (2.0 * pi);
  }
  auto sum = matsubara_sum(
      thermal, [&](double xi) { return response_at_xi(model, xi, L, k_C); },
      [&]() { return response_at_xi(model, 0.0, L, k_C); });
  return 0.5 * sum.value;
}

double pfa_response(double L, const DielectricModel& model,
                    const ThermalSpec& thermal) {
  PlanePlaneSpec s;
  s.L = L;
  s.model1 = model;
  s.model2 = model;
  s.thermal = thermal;
  return 0.5 * std::abs(gradient_pp(s));
}

double lateral_energy(const CorrugationSpec& spec) {
  spec.validate();
  if (spec.theta != 0.0)
    throw DomainError("lateral_energy: theta must be 0 (see torque_energy)");
  double gc = response_function(spec.k_C(), spec.L, spec.model, spec.thermal);
  return -0.5 * spec.area() * gc * spec.a1 * spec.a2 *
         std::cos(spec.k_C() * spec.b);
}

double lateral_force(const CorrugationSpec& spec) {
  spec.validate();
  double gc = response_function(spec.k_C(), spec.L, spec.model, spec.thermal);
  return -0.5 * spec.area() * gc * spec.a1 * spec.a2 * spec.k_C() *
         std::sin(spec.k_C() * spec.b);
}

static double sinc(double u) {
  return (std::abs(u) < 1e-8) ? 1.0 - u * u / 6.0 : std::sin(u) / u;
}

double torque_energy(const CorrugationSpec& spec) {
  spec.validate();
  double kC = spec.k_C();
  double gc = response_function(kC, spec.L, spec.model, spec.thermal);
  double u = 0.5 * kC * spec.theta * spec.Ly;
  return -0.5 * spec.area() * gc * spec.a1 * spec.a2 * std::cos(kC * spec.b) *
         sinc(u);
}

double torque(const CorrugationSpec& spec) {
  spec.validate();
  double kC = spec.k_C();
  double gc = response_function(kC, spec.L, spec.model, spec.thermal);
  double u = 0.5 * kC * spec.theta * spec.Ly;
  double dsinc_du = (std::abs(u) < 1e-6) ? -u / 3.0 : (std::cos(u) - sinc(u)) / u;
  double du_dtheta = 0.5 * kC * spec.Ly;
  return 0.5 * spec.area() * gc * spec.a1 * spec.a2 * std::cos(kC * spec.b) *
         dsinc_du * du_dtheta;
}

TorqueMax torque_max(const CorrugationSpec& spec) {
  spec.validate();
  double kC = spec.k_C();
  double gc = response_function(kC, spec.L, spec.model, spec.thermal);
  double amp = 0.5 * spec.area() * gc * spec.a1 * spec.a2 * 0.5 * kC * spec.Ly;
  // maximise |sinc'(u)| over u in (0, pi) by golden-section search
  auto f = [](double u) { return std::abs((std::cos(u) - std::sin(u) / u) / u); };
  double a = 1e-4, b = pi;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - gr * (b - a), d = a + gr * (b - a);
  for (int it = 0; it < 200; ++it) {
    if (f(c) > f(d))
      b = d;
    else
      a = c;
    c = b - gr * (b - a);
    d = a + gr * (b - a);
    if (b - a < 1e-12) break;
  }
  double ustar = 0.5 * (a + b);
  TorqueMax out;
  out.theta_star = 2.0 * ustar / (kC * spec.Ly);
  out.tau_star = amp * f(ustar);
  return out;
}

} // namespace casimir
