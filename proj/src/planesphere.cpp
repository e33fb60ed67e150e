#include "casimir/planesphere.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/mie.hpp"
#include "casimir/parallel.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/special.hpp"
#include "casimir/specular.hpp"

namespace casimir {

int PlaneSphereSpec::effective_ell_max() const {
  if (ell_max > 0) return std::min(ell_max, 255);
  int l = static_cast<int>(std::ceil(12.0 * R / L));
  return std::clamp(l, 10, 255);
}

void PlaneSphereSpec::validate() const {
  if (!(L > 0.0) || !(R > 0.0))
    throw DomainError("PlaneSphereSpec: L and R must be > 0");
  if (ell_max > 255)
    throw DomainError("PlaneSphereSpec: ell_max is capped at 255");
  if (quad_level < 1 || xi_level < 1)
    throw DomainError("PlaneSphereSpec: quadrature levels must be >= 1");
}

namespace {

constexpr double neg_inf = -std::numeric_limits<double>::infinity();

// Basis layout inside a block: (l, E), (l, M) interleaved for
// l = lmin..lmax-1, with both polarizations of l = lmax stored last so that
// the leading principal minor of the Cholesky factor drops exactly the
// highest multipole.
struct Layout {
  int lmin, lmax, dim;
  int index(int l, int pol) const { // pol 0 = E, 1 = M
    if (l == lmax) return dim - 2 + pol;
    return 2 * (l - lmin) + pol;
  }
};

Layout make_layout(int m, int lmax) {
  Layout lay;
  lay.lmin = std::max(1, m);
  lay.lmax = lmax;
  lay.dim = 2 * (lmax - lay.lmin + 1);
  return lay;
}

// quadrature grid in t = y - y0
struct NodeGrid {
  std::vector<double> t, w;
};

NodeGrid make_node_grid(int lmax, int level) {
  double span = 2.0 * lmax + 12.0 * std::sqrt(2.0 * lmax + 1.0) + 40.0;
  std::vector<double> edges{0.0};
  double g = 1.0;
  while (g < std::min(64.0, span)) {
    edges.push_back(g);
    g *= 2.0;
  }
  while (edges.back() < span) edges.push_back(std::min(edges.back() + 40.0, span));
  NodeGrid grid;
  const GaussRule& rule = gauss_legendre(16 * level);
  for (size_t p = 0; p + 1 < edges.size(); ++p) {
    double a = edges[p], b = edges[p + 1];
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (size_t i = 0; i < rule.x.size(); ++i) {
      grid.t.push_back(mid + half * rule.x[i]);
      grid.w.push_back(half * rule.w[i]);
    }
  }
  return grid;
}

void rank1_update(std::vector<double>& A, const std::vector<double>& u,
                  double c) {
  int d = static_cast<int>(u.size());
  for (int i = 0; i < d; ++i) {
    if (u[i] == 0.0) continue;
    double cu = c * u[i];
    double* row = A.data() + static_cast<size_t>(i) * d;
    for (int j = 0; j < d; ++j) row[j] += cu * u[j];
  }
}

// zero-frequency TM / TE moment integrals: int r0(k) k^q e^{-2 k Lc} dk
// expressed as exp(lgamma(q+1) - (q+1) ln(2 Lc)) times a bounded average.
struct ZeroFreqMoments {
  double ln_gamma_scale(int q, double Lc) const {
    return std::lgamma(q + 1.0) - (q + 1.0) * std::log(2.0 * Lc);
  }
  // weighted average of f over the Gamma(q+1) density in t = 2 k Lc
  static double gamma_average(int q, const std::function<double(double)>& f) {
    double s = std::sqrt(q + 1.0);
    double lo = std::max(0.0, q - 12.0 * s);
    double hi = q + 12.0 * s + 25.0;
    const GaussRule& rule = gauss_legendre(48);
    double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    double acc = 0.0;
    for (size_t i = 0; i < rule.x.size(); ++i) {
      double t = mid + half * rule.x[i];
      if (t <= 0.0) continue;
      double lnw = q * std::log(t) - t - std::lgamma(q + 1.0);
      acc += half * rule.w[i] * std::exp(lnw) * f(t);
    }
    return acc;
  }
};

} // namespace

MultipoleBlock translation_round_trip(int m, double xi_ev,
                                      const PlaneSphereSpec& spec) {
  spec.validate();
  if (m < 0) throw DomainError("translation_round_trip: m must be >= 0");
  int lmax = spec.effective_ell_max();
  if (m > lmax) throw DomainError("translation_round_trip: m exceeds ell_max");
  Layout lay = make_layout(m, lmax);
  const double Lc = spec.center_distance();

  MultipoleBlock blk;
  blk.m = m;
  blk.xi = xi_ev;
  blk.lmin = lay.lmin;
  blk.lmax = lay.lmax;
  blk.dim = lay.dim;
  size_t nn = static_cast<size_t>(lay.dim) * lay.dim;
  std::vector<double> S(nn, 0.0);
  blk.S1.assign(nn, 0.0);
  blk.S2.assign(nn, 0.0);

  // per-(l, P) half-weights: sqrt(Mie magnitude) times the multipole norm
  std::vector<double> gE(lmax + 1, neg_inf), gM(lmax + 1, neg_inf);

  if (xi_ev > 0.0) {
    double kap = xi_ev / hbar_c;
    double y0 = 2.0 * kap * Lc;
    MieLadder mie = mie_ladder(lmax, xi_ev, spec.R, spec.sphere);
    for (int l = lay.lmin; l <= lmax; ++l) {
      double lnN = ln_multipole_norm(l, m);
      gE[l] = 0.5 * mie.ln_a[l] + lnN;
      gM[l] = 0.5 * mie.ln_b[l] + lnN;
    }
    NodeGrid grid = make_node_grid(lmax, spec.quad_level);
    std::vector<double> ln_pi(lmax + 1), ln_tau(lmax + 1);
    std::vector<double> u(lay.dim), v(lay.dim);
    for (size_t nidx = 0; nidx < grid.t.size(); ++nidx) {
      double y = y0 + grid.t[nidx];
      double x = y / y0;
      double k = std::sqrt(grid.t[nidx] * (y + y0)) / (2.0 * Lc);
      ReflectionPair r = (k > 0.0) ? reflection(spec.plate, xi_ev, k)
                                   : ReflectionPair{0.0, 0.0};
      double base = std::log(grid.w[nidx]) - y - std::log(2.0 * Lc * kap);
      double half_tm = (r.tm > 0.0) ? 0.5 * (std::log(r.tm) + base) : neg_inf;
      double half_te = (r.te < 0.0) ? 0.5 * (std::log(-r.te) + base) : neg_inf;
      legendre_pi_tau(m, lmax, x, ln_pi.data(), ln_tau.data());
      for (int l = lay.lmin; l <= lmax; ++l) {
        int iE = lay.index(l, 0), iM = lay.index(l, 1);
        u[iE] = std::exp(gE[l] + ln_tau[l] + half_tm);
        u[iM] = std::exp(gM[l] + ln_pi[l] + half_tm);
        v[iE] = std::exp(gE[l] + ln_pi[l] + half_te);
        v[iM] = std::exp(gM[l] + ln_tau[l] + half_te);
      }
      double dfac = y / Lc;
      rank1_update(S, u, 1.0);
      rank1_update(S, v, 1.0);
      rank1_update(blk.S1, u, dfac);
      rank1_update(blk.S1, v, dfac);
      rank1_update(blk.S2, u, dfac * dfac);
      rank1_update(blk.S2, v, dfac * dfac);
    }
  } else {
    // xi = 0: polarizations decouple; the rescaled Mie prefactors pair with
    // moment integrals of the zero-frequency reflections
    MieZeroFrequency mz = mie_zero_frequency(lmax, spec.R, spec.sphere);
    ReflectionPair r0kind; // magnitudes of the k-independent parts
    // TM: perfect, plasma, drude, tabulated+tail saturate at 1;
    // Drude-Lorentz gives (eps0-1)/(eps0+1)
    double rtm0;
    bool te_active = false;
    double kp = 0.0; // plasma wavevector of the plate
    switch (spec.plate.kind()) {
      case MaterialKind::PerfectMirror:
        rtm0 = 1.0;
        te_active = true;
        break;
      case MaterialKind::Plasma:
        rtm0 = 1.0;
        te_active = true;
        kp = spec.plate.omega_p() / hbar_c;
        break;
      case MaterialKind::Drude:
        rtm0 = 1.0;
        break;
      case MaterialKind::DrudeLorentz:
        rtm0 = (spec.plate.eps0() - 1.0) / (spec.plate.eps0() + 1.0);
        break;
      case MaterialKind::Tabulated:
        if (!spec.plate.drude_tail())
          throw DomainError("plane-sphere: tabulated plate has no xi -> 0 limit");
        rtm0 = 1.0;
        break;
    }
    (void)r0kind;
    ZeroFreqMoments zf;
    // half-weights: sqrt(|a0| R^{2l+1}) l c_{lm} N_{lm}
    for (int l = lay.lmin; l <= lmax; ++l) {
      double lnRfac = (l + 0.5) * std::log(spec.R);
      double angul = std::log(static_cast<double>(l)) + ln_legendre_lead(l, m) +
                     ln_multipole_norm(l, m);
      if (mz.a0[l] != 0.0)
        gE[l] = 0.5 * std::log(std::abs(mz.a0[l])) + lnRfac + angul;
      if (mz.b0[l] != 0.0)
        gM[l] = 0.5 * std::log(std::abs(mz.b0[l])) + lnRfac + angul;
    }
    auto add_sector = [&](int pol, double lnr_const,
                          const std::function<double(int)>& ln_avg) {
      const std::vector<double>& g = (pol == 0) ? gE : gM;
      for (int l1 = lay.lmin; l1 <= lmax; ++l1) {
        if (g[l1] == neg_inf) continue;
        for (int l2 = l1; l2 <= lmax; ++l2) {
          if (g[l2] == neg_inf) continue;
          int q = l1 + l2;
          int i = lay.index(l1, pol), j = lay.index(l2, pol);
          for (int der = 0; der < 3; ++der) {
            double lnI = zf.ln_gamma_scale(q + der, Lc) + lnr_const +
                         ln_avg(q + der);
            double val = std::exp(g[l1] + g[l2] + lnI) *
                         ((der == 0) ? 1.0 : (der == 1 ? 2.0 : 4.0));
            std::vector<double>& A = (der == 0) ? S : (der == 1 ? blk.S1 : blk.S2);
            A[static_cast<size_t>(i) * lay.dim + j] += val;
            if (i != j) A[static_cast<size_t>(j) * lay.dim + i] += val;
          }
        }
      }
    };
    if (rtm0 > 0.0)
      add_sector(0, std::log(rtm0), [](int) { return 0.0; });
    if (te_active) {
      if (spec.plate.kind() == MaterialKind::PerfectMirror) {
        add_sector(1, 0.0, [](int) { return 0.0; });
      } else {
        // plasma plate: bounded average of -r_TE(k) over the Gamma density
        auto avg = [&](int q) {
          double a = ZeroFreqMoments::gamma_average(q, [&](double t) {
            double k = t / (2.0 * Lc);
            double kt = std::hypot(k, kp);
            return (kt - k) / (kt + k);
          });
          return (a > 0.0) ? std::log(a) : neg_inf;
        };
        add_sector(1, 0.0, avg);
      }
    }
  }

  // D = 1 - S
  blk.D.assign(nn, 0.0);
  for (int i = 0; i < lay.dim; ++i)
    for (int j = 0; j < lay.dim; ++j)
      blk.D[static_cast<size_t>(i) * lay.dim + j] =
          (i == j ? 1.0 : 0.0) - S[static_cast<size_t>(i) * lay.dim + j];
  return blk;
}

double MultipoleBlock::spectral_radius_bound() const {
  double worst = 0.0;
  for (int i = 0; i < dim; ++i)
    worst = std::max(worst, 1.0 - D[static_cast<size_t>(i) * dim + i]);
  return worst;
}

namespace {

// dense Cholesky, returns false if not positive definite
bool cholesky(std::vector<double>& A, int n) {
  for (int j = 0; j < n; ++j) {
    double d = A[static_cast<size_t>(j) * n + j];
    for (int k = 0; k < j; ++k) {
      double v = A[static_cast<size_t>(j) * n + k];
      d -= v * v;
    }
    if (!(d > 0.0)) return false;
    double s = std::sqrt(d);
    A[static_cast<size_t>(j) * n + j] = s;
    for (int i = j + 1; i < n; ++i) {
      double v = A[static_cast<size_t>(i) * n + j];
      for (int k = 0; k < j; ++k)
        v -= A[static_cast<size_t>(i) * n + k] * A[static_cast<size_t>(j) * n + k];
      A[static_cast<size_t>(i) * n + j] = v / s;
    }
  }
  return true;
}

// solve L L^T X = B in place of B (n x n, row-major), L lower
void chol_solve(const std::vector<double>& L, int n, std::vector<double>& B) {
  // forward: L Y = B, column-wise over all rhs columns
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < i; ++k) {
      double l = L[static_cast<size_t>(i) * n + k];
      if (l == 0.0) continue;
      for (int c = 0; c < n; ++c)
        B[static_cast<size_t>(i) * n + c] -= l * B[static_cast<size_t>(k) * n + c];
    }
    double d = L[static_cast<size_t>(i) * n + i];
    for (int c = 0; c < n; ++c) B[static_cast<size_t>(i) * n + c] /= d;
  }
  // backward: L^T X = Y
  for (int i = n - 1; i >= 0; --i) {
    for (int k = i + 1; k < n; ++k) {
      double l = L[static_cast<size_t>(k) * n + i];
      if (l == 0.0) continue;
      for (int c = 0; c < n; ++c)
        B[static_cast<size_t>(i) * n + c] -= l * B[static_cast<size_t>(k) * n + c];
    }
    double d = L[static_cast<size_t>(i) * n + i];
    for (int c = 0; c < n; ++c) B[static_cast<size_t>(i) * n + c] /= d;
  }
}

} // namespace

MultipoleBlock::LogDet MultipoleBlock::log_det() const {
  LogDet out;
  std::vector<double> fac = D;
  if (!cholesky(fac, dim))
    throw NumericError("multipole block: round-trip spectral radius >= 1 "
                       "(m=" + std::to_string(m) + ", xi=" + std::to_string(xi) + ")");
  for (int i = 0; i < dim; ++i) {
    double ld = 2.0 * std::log(fac[static_cast<size_t>(i) * dim + i]);
    out.value += ld;
    if (i < dim - 2) out.value_sub += ld;
  }
  std::vector<double> X1 = S1;
  chol_solve(fac, dim, X1);
  std::vector<double> X2 = S2;
  chol_solve(fac, dim, X2);
  double tr1 = 0.0, tr2 = 0.0, tr11 = 0.0;
  for (int i = 0; i < dim; ++i) {
    tr1 += X1[static_cast<size_t>(i) * dim + i];
    tr2 += X2[static_cast<size_t>(i) * dim + i];
    for (int j = 0; j < dim; ++j)
      tr11 += X1[static_cast<size_t>(i) * dim + j] * X1[static_cast<size_t>(j) * dim + i];
  }
  out.d1 = tr1;               // d ln det / d Lc
  out.d2 = -tr2 - tr11;       // d^2 ln det / d Lc^2
  return out;
}

namespace {

struct SumTuple {
  double v = 0.0, d1 = 0.0, d2 = 0.0, vsub = 0.0;
  SumTuple& operator+=(const SumTuple& o) {
    v += o.v;
    d1 += o.d1;
    d2 += o.d2;
    vsub += o.vsub;
    return *this;
  }
  SumTuple operator*(double c) const { return {v * c, d1 * c, d2 * c, vsub * c}; }
};

// sum over m >= 0 blocks at one frequency, doubling m > 0
SumTuple sum_blocks(const PlaneSphereSpec& spec, double xi, int* m_used) {
  SumTuple acc;
  int lmax = spec.effective_ell_max();
  int mcap = (spec.m_max >= 0) ? std::min(spec.m_max, lmax) : lmax;
  int quiet = 0;
  for (int m = 0; m <= mcap; ++m) {
    MultipoleBlock blk = translation_round_trip(m, xi, spec);
    auto ld = blk.log_det();
    double w = (m == 0) ? 1.0 : 2.0;
    acc += SumTuple{ld.value, ld.d1, ld.d2, ld.value_sub} * w;
    if (m_used) *m_used = std::max(*m_used, m);
    if (std::abs(ld.value) <= spec.m_rel_tol * std::abs(acc.v))
      ++quiet;
    else
      quiet = 0;
    if (quiet >= 2) break;
  }
  return acc;
}

} // namespace

PlaneSphereResult compute_ps(const PlaneSphereSpec& spec) {
  spec.validate();
  PlaneSphereResult res;
  int lmax = spec.effective_ell_max();
  res.diag.ell_max_used = lmax;
  res.diag.ell_max_warning = (lmax * spec.L / spec.R < 4.0);
  int workers = (spec.workers > 0) ? spec.workers : default_workers();
  int m_used = 0;

  if (spec.thermal.T == 0.0) {
    // E = (hbar c / 4 pi Lc) int_0^inf du G(u), u = 2 xi Lc / hbar_c
    const double Lc = spec.center_distance();
    std::vector<double> edges{0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0};
    const GaussRule& rule = gauss_legendre(8 * spec.xi_level);
    std::vector<double> un, uw;
    for (size_t p = 0; p + 1 < edges.size(); ++p) {
      double mid = 0.5 * (edges[p] + edges[p + 1]);
      double half = 0.5 * (edges[p + 1] - edges[p]);
      for (size_t i = 0; i < rule.x.size(); ++i) {
        un.push_back(mid + half * rule.x[i]);
        uw.push_back(half * rule.w[i]);
      }
    }
    std::vector<int> mloc(un.size(), 0);
    auto vals = parallel_map<SumTuple>(
        static_cast<int>(un.size()), workers, [&](int i) {
          double xi = 0.5 * un[i] * hbar_c / Lc;
          return sum_blocks(spec, xi, &mloc[i]);
        });
    SumTuple total;
    for (size_t i = 0; i < vals.size(); ++i) total += vals[i] * uw[i];
    for (int mu : mloc) m_used = std::max(m_used, mu);
    double pref = hbar_c / (4.0 * pi * Lc);
    res.free_energy = pref * total.v;
    res.force = -pref * total.d1;
    res.gradient = pref * total.d2;
    res.diag.ell_residual = std::abs(pref * (total.v - total.vsub));
  } else {
    // Matsubara sum with fixed-chunk parallel evaluation
    double kT = k_boltzmann * spec.thermal.T;
    SumTuple acc = sum_blocks(spec, 0.0, &m_used) * 0.5;
    int quiet = 0;
    double last = 0.0, prev = 0.0;
    bool done = false;
    const int chunk = 8;
    for (int n0 = 1; n0 <= spec.thermal.max_terms && !done; n0 += chunk) {
      auto vals = parallel_map<SumTuple>(chunk, workers, [&](int i) {
        double xi = spec.thermal.xi(n0 + i);
        return sum_blocks(spec, xi, nullptr);
      });
      for (int i = 0; i < chunk; ++i) {
        prev = last;
        last = vals[i].v;
        acc += vals[i];
        if (std::abs(last) <= spec.thermal.tolerance * std::abs(acc.v))
          ++quiet;
        else
          quiet = 0;
        if (quiet >= 3) {
          done = true;
          break;
        }
      }
    }
    if (!done)
      throw ConvergenceError("plane-sphere: matsubara sum not converged",
                             kT * std::abs(last));
    double ratio = (std::abs(prev) > 0.0) ? std::abs(last) / std::abs(prev) : 0.0;
    res.diag.matsubara_tail =
        kT * ((ratio < 1.0) ? std::abs(last) * ratio / (1.0 - ratio) : std::abs(last));
    res.free_energy = kT * acc.v;
    res.force = -kT * acc.d1;
    res.gradient = kT * acc.d2;
    res.diag.ell_residual = std::abs(kT * (acc.v - acc.vsub));
  }
  res.diag.m_max_used = m_used;
  return res;
}

PlaneSphereResult free_energy_ps(const PlaneSphereSpec& spec) { return compute_ps(spec); }

double force_ps(const PlaneSphereSpec& spec) { return compute_ps(spec).force; }

double gradient_ps(const PlaneSphereSpec& spec) { return compute_ps(spec).gradient; }

double analytic_l1_perf(double L, double R, double T) {
  if (!(L > 0.0) || !(R > 0.0)) throw DomainError("analytic_l1_perf: L, R > 0");
  if (!(T > 0.0)) throw DomainError("analytic_l1_perf: T must be > 0");
  double Lc = L + R;
  double lt = thermal_wavelength(T);
  double nu = 2.0 * pi * Lc / lt;
  return -3.0 * hbar_c * R * R * R / (4.0 * lt * Lc * Lc * Lc) * phi_nu(nu);
}

double entropy_l1_perf(double L, double R, double T) {
  if (!(L > 0.0) || !(R > 0.0)) throw DomainError("entropy_l1_perf: L, R > 0");
  if (!(T > 0.0)) throw DomainError("entropy_l1_perf: T must be > 0");
  double Lc = L + R;
  double nu = 2.0 * pi * Lc / thermal_wavelength(T);
  return 3.0 * k_boltzmann * R * R * R / (4.0 * Lc * Lc * Lc) *
         (phi_nu(nu) + nu * phi_nu_prime(nu));
}

double plasma_high_T(double L, double R, double lambda_P, double T) {
  if (!(lambda_P > 0.0)) throw DomainError("plasma_high_T: lambda_P > 0");
  if (!(T > 0.0)) throw DomainError("plasma_high_T: T must be > 0");
  double Lc = L + R;
  double lt = thermal_wavelength(T);
  double alpha = 2.0 * pi * R / lambda_P;
  double bracket;
  if (alpha < 1e-3) {
    bracket = 2.0 / 3.0 + alpha * alpha / 45.0; // coth expansion
  } else {
    bracket = 1.0 + 1.0 / (alpha * alpha) - 1.0 / (std::tanh(alpha) * alpha);
  }
  return -3.0 * hbar_c * R * R * R / (8.0 * lt * Lc * Lc * Lc) * bracket;
}

double drude_high_T(double L, double R, double T) {
  if (!(T > 0.0)) throw DomainError("drude_high_T: T must be > 0");
  double Lc = L + R;
  return -hbar_c * R * R * R / (4.0 * thermal_wavelength(T) * Lc * Lc * Lc);
}

double theta_ratio(const PlaneSphereSpec& spec) {
  spec.validate();
  if (!(spec.thermal.T > 0.0)) return 1.0;
  PlaneSphereSpec cold = spec;
  cold.thermal.T = 0.0;
  double ft = compute_ps(spec).force;
  double f0 = compute_ps(cold).force;
  return ft / f0;
}

BetaFit beta_g_fit(const std::vector<std::pair<double, double>>& samples) {
  if (samples.size() < 5)
    throw DomainError("beta_g_fit: need at least 5 samples");
  // least squares for rho - 1 = beta x + c2 x^2 + c3 x^3
  double A[3][3] = {{0}}, b[3] = {0};
  for (auto [x, rho] : samples) {
    if (!(x > 0.0)) throw DomainError("beta_g_fit: x must be > 0");
    double p[3] = {x, x * x, x * x * x};
    for (int i = 0; i < 3; ++i) {
      b[i] += (rho - 1.0) * p[i];
      for (int j = 0; j < 3; ++j) A[i][j] += p[i] * p[j];
    }
  }
  // column-scaled determinant as a conditioning guard
  double s[3];
  for (int j = 0; j < 3; ++j) s[j] = std::sqrt(A[j][j]);
  double det = A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) -
               A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
               A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
  double scaled = det / (s[0] * s[0] * s[1] * s[1] * s[2] * s[2]);
  BetaFit fit;
  fit.condition = (scaled != 0.0) ? 1.0 / std::abs(scaled) : std::numeric_limits<double>::infinity();
  if (!(std::abs(scaled) > 1e-12))
    throw NumericError("beta_g_fit: ill-conditioned fit, condition ~ " +
                       std::to_string(fit.condition));
  // Cramer solve
  auto det3 = [](double M[3][3]) {
    return M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
           M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
           M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
  };
  double coef[3];
  for (int c = 0; c < 3; ++c) {
    double M[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) M[i][j] = (j == c) ? b[i] : A[i][j];
    coef[c] = det3(M) / det;
  }
  fit.beta = coef[0];
  double ss = 0.0;
  for (auto [x, rho] : samples) {
    double model = 1.0 + coef[0] * x + coef[1] * x * x + coef[2] * x * x * x;
    ss += (rho - model) * (rho - model);
  }
  fit.residual = std::sqrt(ss / samples.size());
  return fit;
}

} // namespace casimir
