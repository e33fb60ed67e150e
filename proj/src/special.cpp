#include "casimir/special.hpp"

#include <cassert>
#include <cmath>
#include <limits>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

static double ln_sinh(double x) {
  if (x > 30.0) return x - std::log(2.0) + std::log1p(-std::exp(-2.0 * x));
  return std::log(std::sinh(x));
}

static double ln_cosh(double x) {
  if (x > 30.0) return x - std::log(2.0) + std::log1p(std::exp(-2.0 * x));
  return std::log(std::cosh(x));
}

RicattiLadder modified_ricatti(int lmax, double x) {
  if (!(x > 0.0)) throw DomainError("modified_ricatti: x must be > 0");
  RicattiLadder lad;
  lad.ln_S.assign(lmax + 1, 0.0);
  lad.ln_Sp.assign(lmax + 1, 0.0);
  lad.ln_C.assign(lmax + 1, 0.0);
  lad.ln_Cp.assign(lmax + 1, 0.0);

  // Regular family: ratios rho_l = S_l / S_{l-1} by downward recurrence
  //   1/rho_l = (2l+1)/x + rho_{l+1}
  // started well above lmax with the small-ratio asymptote.
  int lstart = lmax + 16 + static_cast<int>(1.5 * std::min(x, 2.0e4));
  double rho = x / (2.0 * lstart + 3.0);
  std::vector<double> ln_rho(lmax + 1, 0.0);
  for (int l = lstart; l >= 1; --l) {
    rho = x / ((2.0 * l + 1.0) + x * rho);
    if (l <= lmax) ln_rho[l] = std::log(rho);
  }
  lad.ln_S[0] = ln_sinh(x);
  lad.ln_Sp[0] = ln_cosh(x);
  for (int l = 1; l <= lmax; ++l) {
    lad.ln_S[l] = lad.ln_S[l - 1] + ln_rho[l];
    // S'_l = S_{l-1} - (l/x) S_l = S_{l-1} (1 - (l/x) rho_l), always > 0
    double t = 1.0 - (l / x) * std::exp(ln_rho[l]);
    if (t <= 0.0) throw NumericError("modified_ricatti: S' recurrence failed");
    lad.ln_Sp[l] = lad.ln_S[l - 1] + std::log(t);
  }

  // Decaying family: upward on t_l = C_l / C_{l-1}.
  lad.ln_C[0] = std::log(pi / 2.0) - x;
  lad.ln_Cp[0] = lad.ln_C[0]; // C'_0 = -C_0
  double t = 1.0 + 1.0 / x;   // C_1/C_0
  for (int l = 1; l <= lmax; ++l) {
    lad.ln_C[l] = lad.ln_C[l - 1] + std::log(t);
    // C'_l = -C_{l-1} - (l/x) C_l ; magnitude C_{l-1} (1 + (l/x) t_l)
    lad.ln_Cp[l] = lad.ln_C[l - 1] + std::log1p((l / x) * t);
    t = 1.0 / t + (2.0 * l + 1.0) / x;
  }
  return lad;
}

void legendre_pi_tau(int m, int lmax, double x, double* ln_pi, double* ln_tau) {
  if (x < 1.0) throw DomainError("legendre_pi_tau: x must be >= 1");
  const double neg_inf = -std::numeric_limits<double>::infinity();
  int lmin = std::max(1, m);
  double s2 = (x - 1.0) * (x + 1.0); // x^2 - 1
  double s = std::sqrt(s2);

  // P_l^m carried as mantissa in [1,2) + exponent to dodge overflow.
  // ln P_mm = ln (2m-1)!! + (m/2) ln(x^2-1)
  double lnPmm = (m == 0) ? 0.0
                          : std::lgamma(2.0 * m + 1.0) - m * std::log(2.0) -
                                std::lgamma(m + 1.0) + 0.5 * m * std::log(s2);
  // work in plain logs of P via stable two-term recurrence on scaled values
  double scale = lnPmm; // running exponent offset
  double pm1 = 1.0;     // P_{l-1} / e^{scale}
  double pl = 1.0;      // P_l     / e^{scale}, starts at l = m
  auto emit = [&](int l, double p_cur, double p_prev) {
    double lnP = scale + std::log(p_cur);
    if (l < lmin) return;
    ln_pi[l] = (m == 0) ? neg_inf : std::log(static_cast<double>(m)) + lnP - std::log(s);
    // tau = [ l x P_l - (l+m) P_{l-1} ] / sqrt(x^2-1)
    double num = l * x * p_cur - (l + m) * p_prev;
    if (num <= 0.0) {
      // only reachable through rounding at x extremely close to 1 (m = 0)
      num = std::max(num, 1e-30 * l * x * p_cur);
    }
    ln_tau[l] = scale + std::log(num) - std::log(s);
  };

  // l = m: previous order is zero
  if (m >= 1) {
    // tau_mm = m x P_mm / sqrt(x^2-1)  (from the recurrence with P_{m-1}^m = 0)
    double lnP = lnPmm;
    if (m >= lmin) {
      ln_pi[m] = std::log(static_cast<double>(m)) + lnP - std::log(s);
      ln_tau[m] = std::log(m * x) + lnP - std::log(s);
    }
    pm1 = 0.0;
    pl = 1.0;
  } else {
    // m = 0: start from P_0 = 1, P_1 = x
    scale = 0.0;
    pm1 = 1.0;
    pl = x;
    emit(1, pl, pm1);
  }

  int lcur = (m >= 1) ? m : 1;
  while (lcur < lmax) {
    // (l-m+1) P_{l+1} = (2l+1) x P_l - (l+m) P_{l-1}
    double pnext = ((2.0 * lcur + 1.0) * x * pl - (lcur + m) * pm1) / (lcur - m + 1.0);
    pm1 = pl;
    pl = pnext;
    ++lcur;
    // renormalise to avoid overflow
    if (pl > 1e280) {
      double f = 1e-280;
      pl *= f;
      pm1 *= f;
      scale -= std::log(f);
    }
    emit(lcur, pl, pm1);
  }
}

double ln_legendre_lead(int l, int m) {
  return std::lgamma(2.0 * l + 1.0) - l * std::log(2.0) -
         std::lgamma(l + 1.0) - std::lgamma(l - m + 1.0);
}

double ln_multipole_norm(int l, int m) {
  return 0.5 * (std::log(2.0 * l + 1.0) + std::lgamma(l - m + 1.0) -
                std::log(static_cast<double>(l) * (l + 1.0)) -
                std::lgamma(l + m + 1.0));
}

double dilog(double x) {
  if (x < 0.0 || x > 1.0) throw DomainError("dilog: argument outside [0,1]");
  if (x == 1.0) return pi * pi / 6.0;
  // reflect to keep the series argument <= 1/2
  if (x > 0.5)
    return pi * pi / 6.0 - std::log(x) * std::log1p(-x) - dilog(1.0 - x);
  double sum = 0.0, term = 1.0;
  for (int n = 1; n < 200; ++n) {
    term *= x;
    double add = term / (static_cast<double>(n) * n);
    sum += add;
    if (add < 1e-17 * sum) break;
  }
  return sum;
}

// phi admits the exact representation (q = e^{-2 nu})
//   phi(nu)  = 1/2 + q/(1-q) + 2 nu q/(1-q)^2 + 2 nu^2 q (1+q)/(1-q)^3
//   phi'(nu) = -4 nu^2 q (1 + 4q + q^2)/(1-q)^4
// which is well conditioned at every nu when 1-q is formed with expm1.
double phi_nu(double nu) {
  if (nu <= 0.0) throw DomainError("phi_nu: nu must be > 0");
  double q = std::exp(-2.0 * nu);
  double d = -std::expm1(-2.0 * nu); // 1 - q
  return 0.5 + q / d + 2.0 * nu * q / (d * d) +
         2.0 * nu * nu * q * (1.0 + q) / (d * d * d);
}

double phi_nu_prime(double nu) {
  if (nu <= 0.0) throw DomainError("phi_nu_prime: nu must be > 0");
  double q = std::exp(-2.0 * nu);
  double d = -std::expm1(-2.0 * nu);
  return -4.0 * nu * nu * q * (1.0 + 4.0 * q + q * q) / (d * d * d * d);
}

} // namespace casimir
