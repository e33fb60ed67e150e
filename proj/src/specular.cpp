#include "casimir/specular.hpp"

#include <cmath>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

double kappa(double xi_ev, double k) {
  if (xi_ev < 0.0 || k < 0.0) throw DomainError("kappa: xi and k must be >= 0");
  return std::hypot(k, xi_ev / hbar_c);
}

double kappa_medium(double xi_ev, double k, double eps) {
  if (eps < 1.0) throw DomainError("kappa_medium: eps must be >= 1");
  return std::hypot(k, std::sqrt(eps) * xi_ev / hbar_c);
}

ReflectionPair fresnel(double xi_ev, double k, double eps) {
  if (eps < 1.0) throw DomainError("fresnel: eps must be >= 1");
  if (xi_ev == 0.0 && k == 0.0)
    throw DomainError("fresnel: the (xi, k) = (0, 0) corner is excluded");
  double kp = kappa(xi_ev, k);
  double kt = kappa_medium(xi_ev, k, eps);
  ReflectionPair r;
  r.te = (kp - kt) / (kp + kt);
  r.tm = (eps * kp - kt) / (eps * kp + kt);
  return r;
}

ReflectionPair reflection(const DielectricModel& model, double xi_ev, double k) {
  if (model.kind() == MaterialKind::PerfectMirror) return {-1.0, 1.0};
  if (xi_ev == 0.0) return zero_frequency_reflection(model, k);
  return fresnel(xi_ev, k, model.eval_epsilon(xi_ev));
}

ReflectionPair zero_frequency_reflection(const DielectricModel& model, double k) {
  if (!(k > 0.0)) throw DomainError("zero_frequency_reflection: k must be > 0");
  switch (model.kind()) {
    case MaterialKind::PerfectMirror:
      return {-1.0, 1.0};
    case MaterialKind::Drude:
      // eps xi^2 -> 0: the TE mode decouples, TM saturates
      return {0.0, 1.0};
    case MaterialKind::Plasma: {
      // eps xi^2 -> omega_p^2: kappa_t(0) = sqrt(k^2 + (omega_p/hbar_c)^2)
      double kp = model.omega_p() / hbar_c;
      double kt = std::hypot(k, kp);
      return {(k - kt) / (k + kt), 1.0};
    }
    case MaterialKind::DrudeLorentz: {
      double e0 = model.eps0();
      // kappa_t(0) = k, so TE vanishes and TM takes its dielectric value
      return {0.0, (e0 - 1.0) / (e0 + 1.0)};
    }
    case MaterialKind::Tabulated: {
      if (model.drude_tail()) return {0.0, 1.0};
      throw DomainError("zero_frequency_reflection: tabulated model has no xi -> 0 coverage");
    }
  }
  return {0.0, 0.0};
}

} // namespace casimir
