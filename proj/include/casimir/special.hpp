// Log-scaled special functions.
//
// The multipole engine needs modified Ricatti-Bessel functions up to high
// order and associated Legendre functions of argument x > 1 whose magnitudes
// overflow double range (x^l with l up to 255).  Everything here is carried
// as a natural logarithm of a positive quantity; signs are handled by the
// callers, which know them analytically.

#pragma once

#include <vector>

namespace casimir {

// S_l(x) = x i_l(x)   (regular;  S_0 = sinh x)
// C_l(x) = x k_l(x)   (decaying; C_0 = (pi/2) e^{-x})
// with i_l, k_l the modified spherical Bessel functions.  S'_l > 0 and
// C'_l < 0 for x > 0; ln_Cp stores ln |C'_l|.
struct RicattiLadder {
  std::vector<double> ln_S, ln_Sp, ln_C, ln_Cp; // index = l, size lmax+1
};

RicattiLadder modified_ricatti(int lmax, double x);

// Associated Legendre P_l^m(x) for x >= 1 in the Hobson convention
// P_l^m(x) = (x^2-1)^{m/2} d^m P_l / dx^m  (positive, no Condon-Shortley),
// together with the angular functions
//   pi_lm  = m P_l^m(x) / sqrt(x^2-1)
//   tau_lm = sqrt(x^2-1) dP_l^m/dx .
// Results for l = max(1,m) .. lmax are written to ln_pi[l], ln_tau[l]
// (arrays of size lmax+1; lower entries untouched).  For m = 0 the pi
// entries are set to -infinity.
void legendre_pi_tau(int m, int lmax, double x, double* ln_pi, double* ln_tau);

// ln[(2l)! / (2^l l! (l-m)!)] : coefficient of x^l in P_l^m(x) as x -> inf
double ln_legendre_lead(int l, int m);

// ln of the multipole normalisation sqrt((2l+1)(l-m)! / (l(l+1)(l+m)!))
double ln_multipole_norm(int l, int m);

// dilogarithm Li_2(x) for 0 <= x <= 1
double dilog(double x);

// phi(nu) = (nu^2 cosh nu + nu sinh nu + cosh nu sinh^2 nu) / (2 sinh^3 nu)
// and its derivative; the small-nu limit 3/(2 nu) is handled by series.
double phi_nu(double nu);
double phi_nu_prime(double nu);

} // namespace casimir
