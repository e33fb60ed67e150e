// Mie scattering coefficients of a homogeneous sphere, analytically
// continued to imaginary frequency.
//
// In terms of the modified Ricatti-Bessel functions S_l, C_l (special.hpp),
// with x = xi R / hbar_c, n = sqrt(eps(i xi)) and y = n x:
//
//   a_l = (-1)^l (pi/2) [n S_l(y) S'_l(x) - S_l(x) S'_l(y)]
//                       / [n S_l(y) C'_l(x) - C_l(x) S'_l(y)]
//   b_l = (-1)^l (pi/2) [S_l(y) S'_l(x) - n S_l(x) S'_l(y)]
//                       / [S_l(y) C'_l(x) - n C_l(x) S'_l(y)]
//
// The sign convention makes a_1 -> +(2/3) x^3 and b_1 -> -(1/3) x^3 for a
// perfect mirror as x -> 0.  Both coefficients keep a fixed sign along
// xi > 0 at fixed l.  Values can exceed double range at large x, so the
// canonical representation is logarithmic.

#pragma once

#include <vector>

#include "casimir/materials.hpp"

namespace casimir {

struct MieCoefficients {
  int l = 0;
  double ln_a = 0.0; // ln |a_l|
  double ln_b = 0.0; // ln |b_l|
  int sign_a = 1;
  int sign_b = 1;
  double a() const; // may overflow to +-inf for extreme x
  double b() const;
};

MieCoefficients mie_ab(int l, double xi_ev, double R_nm,
                       const DielectricModel& model);

// Whole ladder l = 1..lmax at one frequency (what the engine consumes).
struct MieLadder {
  std::vector<double> ln_a, ln_b; // index l, entry 0 unused
  std::vector<int> sign_a, sign_b;
};

MieLadder mie_ladder(int lmax, double xi_ev, double R_nm,
                     const DielectricModel& model);

// xi -> 0 limits  a_l ~ a0 x^{2l+1},  b_l ~ b0 x^{2l+1}  (signed prefactors;
// b0 = 0 for any model without a zero-frequency magnetic response).
struct MieZeroFrequency {
  std::vector<double> a0, b0; // index l
};

MieZeroFrequency mie_zero_frequency(int lmax, double R_nm,
                                    const DielectricModel& model);

} // namespace casimir
