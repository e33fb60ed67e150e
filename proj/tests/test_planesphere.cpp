#include <doctest.h>

#include <cmath>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/mie.hpp"
#include "casimir/planesphere.hpp"
#include "casimir/pfa.hpp"

using namespace casimir;

namespace {

PlaneSphereSpec pec_spec(double L, double R, double T, int ellmax = 0) {
  PlaneSphereSpec s;
  s.L = L;
  s.R = R;
  s.thermal = ThermalSpec(T);
  s.ell_max = ellmax;
  s.workers = 2;
  return s;
}

double block_trace(const MultipoleBlock& b) {
  double tr = 0.0;
  for (int i = 0; i < b.dim; ++i) tr += 1.0 - b.D[static_cast<size_t>(i) * b.dim + i];
  return tr;
}

} // namespace

TEST_CASE("zero-frequency dipole block reproduces the image-dipole couplings") {
  // exact single-element values for l = 1 at xi = 0:
  //   S_EE(m=0) = R^3/(4 Lc^3), S_EE(|m|=1) = R^3/(8 Lc^3)
  //   S_MM(m=0) = R^3/(8 Lc^3), S_MM(|m|=1) = R^3/(16 Lc^3)
  double R = 1.0, L = 99.0, Lc = 100.0;
  auto s = pec_spec(L, R, 300.0, 1);
  auto b0 = translation_round_trip(0, 0.0, s);
  REQUIRE(b0.dim == 2);
  double see = 1.0 - b0.D[0];
  double smm = 1.0 - b0.D[3];
  CHECK(see == doctest::Approx(R * R * R / (4.0 * std::pow(Lc, 3))).epsilon(1e-10));
  CHECK(smm == doctest::Approx(R * R * R / (8.0 * std::pow(Lc, 3))).epsilon(1e-10));
  // polarizations decouple at zero frequency
  CHECK(b0.D[1] == doctest::Approx(0.0));
  CHECK(b0.D[2] == doctest::Approx(0.0));
  auto b1 = translation_round_trip(1, 0.0, s);
  CHECK(1.0 - b1.D[0] == doctest::Approx(R * R * R / (8.0 * std::pow(Lc, 3))).epsilon(1e-10));
  CHECK(1.0 - b1.D[3] == doctest::Approx(R * R * R / (16.0 * std::pow(Lc, 3))).epsilon(1e-10));
  // derivative accumulators: S1/S = 3/Lc and S2/S = 12/Lc^2 for the
  // Gamma-moment structure of the l1 = l2 = 1 entries
  CHECK(b0.S1[0] / see == doctest::Approx(3.0 / Lc).epsilon(1e-10));
  CHECK(b0.S2[0] / see == doctest::Approx(12.0 / (Lc * Lc)).epsilon(1e-10));
}

TEST_CASE("finite-frequency dipole trace matches the analytic form") {
  // small sphere, small size parameter: sum_m tr S^(m) for l = 1 equals
  // 3 R^3 e^{-2 kap Lc} [kap^2/(2 Lc) + kap/(2 Lc^2) + 1/(4 Lc^3)]
  double R = 2.0, L = 1998.0, Lc = 2000.0;
  auto s = pec_spec(L, R, 300.0, 1);
  for (double kapLc : {0.3, 1.0, 3.0}) {
    double kap = kapLc / Lc;
    double xi = kap * hbar_c;
    double tr = block_trace(translation_round_trip(0, xi, s)) +
                2.0 * block_trace(translation_round_trip(1, xi, s));
    double expect = 3.0 * R * R * R * std::exp(-2.0 * kap * Lc) *
                    (kap * kap / (2.0 * Lc) + kap / (2.0 * Lc * Lc) +
                     1.0 / (4.0 * std::pow(Lc, 3)));
    CHECK(tr == doctest::Approx(expect).epsilon(1e-5));
  }
}

TEST_CASE("single m=0 block reproduces the l=1 analytic integrand at L/R = 20") {
  double R = 50.0, L = 1000.0, Lc = L + R;
  auto s = pec_spec(L, R, 300.0, 1);
  double kap = 0.8 / Lc; // small size parameter kap R = 0.02
  double xi = kap * hbar_c;
  auto blk = translation_round_trip(0, xi, s);
  double lndet = blk.log_det().value;
  double expect = -3.0 * R * R * R / (8.0 * std::pow(Lc, 3)) *
                  std::exp(-2.0 * kap * Lc) * (2.0 * kap * Lc + 1.0);
  CHECK(lndet == doctest::Approx(expect).epsilon(0.01));
}

TEST_CASE("per-m negativity and spectral radius") {
  auto s = pec_spec(100.0, 200.0, 300.0, 12);
  for (int m : {0, 1, 3, 7}) {
    for (double xi : {0.0, 0.05, 0.3}) {
      auto blk = translation_round_trip(m, xi, s);
      CHECK(blk.spectral_radius_bound() < 1.0);
      auto ld = blk.log_det();
      CHECK(ld.value <= 1e-12);
      CHECK(ld.d1 >= 0.0); // free energy rises toward zero with distance
    }
  }
}

TEST_CASE("free energy matches the l=1 asymptotic formula at large distance") {
  double R = 100.0, L = 2000.0; // L/R = 20
  auto s = pec_spec(L, R, 300.0, 10);
  auto res = compute_ps(s);
  double ref = analytic_l1_perf(L, R, 300.0);
  CHECK(res.free_energy < 0.0);
  CHECK(res.free_energy == doctest::Approx(ref).epsilon(0.01));
}

TEST_CASE("force is the analytic derivative of the free energy") {
  double R = 200.0, L = 100.0;
  auto s = pec_spec(L, R, 300.0, 20);
  auto res = compute_ps(s);
  double h = 1e-3 * L;
  auto up = pec_spec(L + h, R, 300.0, 20);
  auto dn = pec_spec(L - h, R, 300.0, 20);
  double f1 = -(compute_ps(up).free_energy - compute_ps(dn).free_energy) / (2.0 * h);
  auto up2 = pec_spec(L + 0.5 * h, R, 300.0, 20);
  auto dn2 = pec_spec(L - 0.5 * h, R, 300.0, 20);
  double f2 = -(compute_ps(up2).free_energy - compute_ps(dn2).free_energy) / h;
  double fd = (4.0 * f2 - f1) / 3.0;
  CHECK(res.force == doctest::Approx(fd).epsilon(1e-5));
  // gradient against the finite difference of the analytic force
  double g1 = -(compute_ps(up).force - compute_ps(dn).force) / (2.0 * h);
  double g2 = -(compute_ps(up2).force - compute_ps(dn2).force) / h;
  double gd = (4.0 * g2 - g1) / 3.0;
  CHECK(res.gradient == doctest::Approx(gd).epsilon(1e-4));
}

TEST_CASE("high-temperature large-distance limits: plasma and drude") {
  double R = 500.0, L = 20000.0, T = 300.0;
  double lambda_P = 136.0;
  double wp = 2.0 * pi * hbar_c / lambda_P;

  auto sp = pec_spec(L, R, T, 10);
  sp.sphere = DielectricModel::plasma(wp);
  sp.plate = DielectricModel::plasma(wp);
  auto rp = compute_ps(sp);
  CHECK(rp.free_energy == doctest::Approx(plasma_high_T(L, R, lambda_P, T)).epsilon(0.05));

  auto sd = pec_spec(L, R, T, 10);
  sd.sphere = DielectricModel::drude(wp, wp / 250.0);
  sd.plate = DielectricModel::drude(wp, wp / 250.0);
  auto rd = compute_ps(sd);
  CHECK(rd.free_energy == doctest::Approx(drude_high_T(L, R, T)).epsilon(0.05));

  // perfect mirrors approach the nu -> inf limit of the l=1 formula
  auto se = pec_spec(L, R, T, 10);
  auto re = compute_ps(se);
  double lt = thermal_wavelength(T), Lc = L + R;
  CHECK(re.free_energy ==
        doctest::Approx(-3.0 * hbar_c * R * R * R / (8.0 * lt * Lc * Lc * Lc))
            .epsilon(0.05));
}

TEST_CASE("pfa deficit: rho below one and closing toward one") {
  // perfect mirrors at T = 0
  double R = 400.0;
  auto mk = [&](double x) {
    auto s = pec_spec(x * R, R, 0.0, 0);
    auto res = compute_ps(s);
    auto pfa = pfa_plane_sphere(x * R, R, DielectricModel::perfect_mirror(),
                                DielectricModel::perfect_mirror(), ThermalSpec(0.0));
    return rho_ratio(res.free_energy, pfa.value.energy);
  };
  double rho_half = mk(0.5);
  double rho_quart = mk(0.25);
  CHECK(rho_half < 1.0);
  CHECK(rho_quart < 1.0);
  CHECK(rho_quart > rho_half); // approaching the PFA from below
  CHECK(rho_quart > 0.75);
  CHECK(rho_quart < 0.99);
}

TEST_CASE("analytic l=1 operations") {
  double R = 10.0, T = 300.0;
  double lt = thermal_wavelength(T);
  // nu -> infinity: phi -> 1/2
  {
    double L = 3.0 * lt;
    double Lc = L + R;
    CHECK(analytic_l1_perf(L, R, T) ==
          doctest::Approx(-3.0 * hbar_c * R * R * R / (8.0 * lt * std::pow(Lc, 3)))
              .epsilon(1e-4));
    // ratio to the drude limit is exactly 3/2
    CHECK(analytic_l1_perf(L, R, T) / drude_high_T(L, R, T) ==
          doctest::Approx(1.5).epsilon(1e-4));
  }
  // nu -> 0: F -> -9 hbar c R^3 / (16 pi Lc^4), independent of T
  {
    double L = 1e-3 * lt;
    double Lc = L + R;
    CHECK(analytic_l1_perf(L, R, T) ==
          doctest::Approx(-9.0 * hbar_c * R * R * R / (16.0 * pi * std::pow(Lc, 4)))
              .epsilon(1e-3));
    // temperature independence in the quantum regime
    CHECK(analytic_l1_perf(L, R, 300.0) ==
          doctest::Approx(analytic_l1_perf(L, R, 150.0)).epsilon(1e-3));
  }
}

TEST_CASE("entropy of the l=1 formula: negative below nu ~ 1.5, sign change") {
  double T = 300.0, R = 1.0;
  double lt = thermal_wavelength(T);
  for (double nu = 0.1; nu <= 1.4; nu += 0.1) {
    double Lc = nu * lt / (2.0 * pi);
    CHECK(entropy_l1_perf(Lc - R, R, T) < 0.0);
  }
  // bisect the sign change in nu
  double lo = 1.3, hi = 1.8;
  for (int it = 0; it < 60; ++it) {
    double mid = 0.5 * (lo + hi);
    double Lc = mid * lt / (2.0 * pi);
    if (entropy_l1_perf(Lc - R, R, T) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  double nu_star = 0.5 * (lo + hi);
  CHECK(nu_star == doctest::Approx(1.50).epsilon(0.015));
  double L_star = nu_star * lt / (2.0 * pi) - R;
  CHECK(L_star / 1000.0 == doctest::Approx(1.82).epsilon(0.02)); // micrometers
  // nu -> infinity: S -> +3 k_B R^3/(8 Lc^3)
  double Lbig = 4.0 * lt;
  CHECK(entropy_l1_perf(Lbig, R, T) > 0.0);
  CHECK(entropy_l1_perf(Lbig, R, T) ==
        doctest::Approx(3.0 * k_boltzmann * R * R * R /
                        (8.0 * std::pow(Lbig + R, 3)))
            .epsilon(1e-3));
}

TEST_CASE("plasma high-T bracket") {
  // alpha = 2 pi 100/136 = 4.62: bracket = 1 + 1/a^2 - coth a / a = 0.83039
  double R = 100.0, lambda_P = 136.0, T = 300.0, L = 50000.0;
  double alpha = 2.0 * pi * R / lambda_P;
  double bracket = 1.0 + 1.0 / (alpha * alpha) - 1.0 / (std::tanh(alpha) * alpha);
  CHECK(bracket == doctest::Approx(0.83039).epsilon(1e-4));
  double Lc = L + R, lt = thermal_wavelength(T);
  CHECK(plasma_high_T(L, R, lambda_P, T) ==
        doctest::Approx(-3.0 * hbar_c * std::pow(R, 3) / (8.0 * lt * std::pow(Lc, 3)) *
                        bracket)
            .epsilon(1e-12));
  // alpha -> infinity reproduces the perfect-mirror limit
  CHECK(plasma_high_T(L, R, 1e-4, T) /
            (-3.0 * hbar_c * std::pow(R, 3) / (8.0 * lt * std::pow(Lc, 3))) ==
        doctest::Approx(1.0).epsilon(1e-6));
  // alpha -> 0: bracket -> 2/3
  CHECK(plasma_high_T(L, R, 1e9, T) /
            (-3.0 * hbar_c * std::pow(R, 3) / (8.0 * lt * std::pow(Lc, 3))) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-6));
  // drude limit scalings
  CHECK(drude_high_T(L, 2.0 * R, T) / drude_high_T(L, R, T) ==
        doctest::Approx(8.0 * std::pow((Lc) / (L + 2.0 * R), 3)).epsilon(1e-12));
  CHECK(drude_high_T(L, R, 2.0 * T) / drude_high_T(L, R, T) ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("beta_g fit") {
  std::vector<std::pair<double, double>> samples;
  for (double x : {0.05, 0.1, 0.2, 0.3, 0.4, 0.5})
    samples.push_back({x, 1.0 - 0.48 * x});
  auto fit = beta_g_fit(samples);
  CHECK(fit.beta == doctest::Approx(-0.48).epsilon(1e-9));
  CHECK(fit.residual < 1e-12);
  // exact cubic recovery
  samples.clear();
  for (double x : {0.05, 0.1, 0.2, 0.3, 0.4, 0.5})
    samples.push_back({x, 1.0 - 0.3 * x + 0.07 * x * x - 0.01 * x * x * x});
  fit = beta_g_fit(samples);
  CHECK(fit.beta == doctest::Approx(-0.3).epsilon(1e-8));
  CHECK_THROWS_AS(beta_g_fit({{0.1, 1.0}, {0.2, 0.9}}), DomainError);
}

TEST_CASE("theta ratio dips below one for a small sphere") {
  double R = 100.0, L = 2500.0;
  auto s = pec_spec(L, R, 300.0, 10);
  double th = theta_ratio(s);
  CHECK(th < 1.0);
  CHECK(th > 0.2);
}

TEST_CASE("spec validation and warnings") {
  auto s = pec_spec(0.0, 10.0, 0.0);
  CHECK_THROWS_AS(compute_ps(s), DomainError);
  auto s2 = pec_spec(10.0, 1000.0, 300.0, 10); // l_max x/R ratio too small
  auto res = compute_ps(s2);
  CHECK(res.diag.ell_max_warning);
  auto s3 = pec_spec(100.0, 100.0, 0.0);
  CHECK(s3.effective_ell_max() == 12);
  auto s4 = pec_spec(1000.0, 10.0, 0.0);
  CHECK(s4.effective_ell_max() == 10); // clamped from below
}
