#include "casimir/mie.hpp"

#include <cmath>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/special.hpp"

namespace casimir {

double MieCoefficients::a() const { return sign_a * std::exp(ln_a); }
double MieCoefficients::b() const { return sign_b * std::exp(ln_b); }

namespace {

// ln(e^A + e^B), both terms positive
double ln_add(double A, double B) {
  double hi = std::max(A, B), lo = std::min(A, B);
  return hi + std::log1p(std::exp(lo - hi));
}

int parity_sign(int l) { return (l % 2 == 0) ? 1 : -1; }

} // namespace

MieLadder mie_ladder(int lmax, double xi_ev, double R_nm,
                     const DielectricModel& model) {
  if (!(xi_ev > 0.0)) throw DomainError("mie_ladder: xi must be > 0 (use mie_zero_frequency)");
  if (!(R_nm > 0.0)) throw DomainError("mie_ladder: R must be > 0");
  double x = xi_ev * R_nm / hbar_c;
  MieLadder out;
  out.ln_a.assign(lmax + 1, 0.0);
  out.ln_b.assign(lmax + 1, 0.0);
  out.sign_a.assign(lmax + 1, 1);
  out.sign_b.assign(lmax + 1, 1);

  const double ln_pi_2 = std::log(pi / 2.0);

  if (model.kind() == MaterialKind::PerfectMirror) {
    auto lx = modified_ricatti(lmax, x);
    for (int l = 1; l <= lmax; ++l) {
      // a_l = (-1)^l (pi/2) S'/C' with C' < 0
      out.ln_a[l] = ln_pi_2 + lx.ln_Sp[l] - lx.ln_Cp[l];
      out.sign_a[l] = -parity_sign(l);
      out.ln_b[l] = ln_pi_2 + lx.ln_S[l] - lx.ln_C[l];
      out.sign_b[l] = parity_sign(l);
    }
    return out;
  }

  double eps = model.eval_epsilon(xi_ev);
  if (!(eps >= 1.0) || !std::isfinite(eps))
    throw NumericError("mie_ladder: invalid eps at this frequency");
  if (eps == 1.0) {
    // transparent sphere: no scattering
    for (int l = 1; l <= lmax; ++l) {
      out.ln_a[l] = out.ln_b[l] = -std::numeric_limits<double>::infinity();
    }
    return out;
  }
  double n = std::sqrt(eps), y = n * x;
  double ln_n = 0.5 * std::log(eps);
  auto lx = modified_ricatti(lmax, x);
  auto ly = modified_ricatti(lmax, y);
  for (int l = 1; l <= lmax; ++l) {
    // numerators via 1 - e^delta, safe against cancellation
    double da = lx.ln_S[l] + ly.ln_Sp[l] - ln_n - ly.ln_S[l] - lx.ln_Sp[l];
    double num_a = -std::expm1(da); // (num)/(n S(y) S'(x))
    double ln_num_a = ln_n + ly.ln_S[l] + lx.ln_Sp[l] + std::log(std::abs(num_a));
    int sgn_num_a = (num_a >= 0.0) ? 1 : -1;
    double ln_den_a = ln_add(ln_n + ly.ln_S[l] + lx.ln_Cp[l],
                             lx.ln_C[l] + ly.ln_Sp[l]); // magnitude, sign -
    out.ln_a[l] = ln_pi_2 + ln_num_a - ln_den_a;
    out.sign_a[l] = parity_sign(l) * sgn_num_a * (-1);

    double db = ln_n + lx.ln_S[l] + ly.ln_Sp[l] - ly.ln_S[l] - lx.ln_Sp[l];
    double num_b = -std::expm1(db);
    double ln_num_b = ly.ln_S[l] + lx.ln_Sp[l] + std::log(std::abs(num_b));
    int sgn_num_b = (num_b >= 0.0) ? 1 : -1;
    double ln_den_b = ln_add(ly.ln_S[l] + lx.ln_Cp[l],
                             ln_n + lx.ln_C[l] + ly.ln_Sp[l]);
    out.ln_b[l] = ln_pi_2 + ln_num_b - ln_den_b;
    out.sign_b[l] = parity_sign(l) * sgn_num_b * (-1);
  }
  return out;
}

MieCoefficients mie_ab(int l, double xi_ev, double R_nm,
                       const DielectricModel& model) {
  if (l < 1) throw DomainError("mie_ab: l must be >= 1");
  auto lad = mie_ladder(l, xi_ev, R_nm, model);
  MieCoefficients c;
  c.l = l;
  c.ln_a = lad.ln_a[l];
  c.ln_b = lad.ln_b[l];
  c.sign_a = lad.sign_a[l];
  c.sign_b = lad.sign_b[l];
  return c;
}

MieZeroFrequency mie_zero_frequency(int lmax, double R_nm,
                                    const DielectricModel& model) {
  if (!(R_nm > 0.0)) throw DomainError("mie_zero_frequency: R must be > 0");
  MieZeroFrequency out;
  out.a0.assign(lmax + 1, 0.0);
  out.b0.assign(lmax + 1, 0.0);
  auto dfact2 = [](int l) {
    // ln[(2l+1)!! (2l-1)!!]
    auto lndf = [](int k) { // ln (2k+1)!!
      return std::lgamma(2.0 * k + 2.0) - k * std::log(2.0) - std::lgamma(k + 1.0);
    };
    return lndf(l) + lndf(l - 1);
  };
  switch (model.kind()) {
    case MaterialKind::PerfectMirror: {
      for (int l = 1; l <= lmax; ++l) {
        double d2 = std::exp(-dfact2(l));
        out.a0[l] = -parity_sign(l) * (l + 1.0) / l * d2;
        out.b0[l] = parity_sign(l) * d2;
      }
      break;
    }
    case MaterialKind::Drude: {
      // electric response saturates (conductor), magnetic response vanishes
      for (int l = 1; l <= lmax; ++l)
        out.a0[l] = -parity_sign(l) * (l + 1.0) / l * std::exp(-dfact2(l));
      break;
    }
    case MaterialKind::Plasma: {
      double alpha = model.omega_p() * R_nm / hbar_c; // 2 pi R / lambda_P
      auto la = modified_ricatti(lmax, alpha);
      for (int l = 1; l <= lmax; ++l) {
        double d2 = std::exp(-dfact2(l));
        out.a0[l] = -parity_sign(l) * (l + 1.0) / l * d2;
        // [(l+1) S - alpha S'] / [l S + alpha S'] < 0, -> -1 as alpha -> inf
        double r = std::exp(la.ln_Sp[l] - la.ln_S[l]); // S'/S
        double num = (l + 1.0) - alpha * r;
        double den = l + alpha * r;
        out.b0[l] = -parity_sign(l) * d2 * (num / den);
      }
      break;
    }
    case MaterialKind::DrudeLorentz: {
      double e0 = model.eps0();
      for (int l = 1; l <= lmax; ++l) {
        double d2 = std::exp(-dfact2(l));
        out.a0[l] = -parity_sign(l) * (l + 1.0) * (e0 - 1.0) /
                    (l * e0 + l + 1.0) * d2;
      }
      break;
    }
    case MaterialKind::Tabulated: {
      if (!model.drude_tail())
        throw DomainError("mie_zero_frequency: tabulated sphere has no xi -> 0 coverage");
      for (int l = 1; l <= lmax; ++l)
        out.a0[l] = -parity_sign(l) * (l + 1.0) / l * std::exp(-dfact2(l));
      break;
    }
  }
  return out;
}

} // namespace casimir
