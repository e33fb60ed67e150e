// Gauss-Legendre rules (nodes computed at startup by Newton iteration) and a
// panel-adaptive integrator used throughout the library.

#pragma once

#include <functional>
#include <vector>

namespace casimir {

struct GaussRule {
  std::vector<double> x; // nodes on (-1, 1)
  std::vector<double> w;
};

// n-point Gauss-Legendre rule; cached per n, thread-safe after first use.
const GaussRule& gauss_legendre(int n);

// Integral of f over [a, b] with a single n-point rule.
double gauss_panel(const std::function<double(double)>& f, double a, double b,
                   int n);

struct AdaptiveResult {
  double value = 0.0;
  double error = 0.0;    // absolute error estimate
  int evaluations = 0;
  bool converged = true;
};

// Adaptive bisection on [a, b]; each panel is accepted when GL(n) and GL(2n)
// agree to the requested tolerance.
AdaptiveResult integrate_adaptive(const std::function<double(double)>& f,
                                  double a, double b, double rel_tol,
                                  double abs_tol = 0.0, int max_depth = 40,
                                  int n = 15);

// Semi-infinite integral: successive windows [a, a+w], [a+w, a+3w], ... each
// integrated adaptively, stopping once a window contributes less than
// rel_tol * |total| (twice in a row).  Suited to exponentially decaying tails.
AdaptiveResult integrate_to_infinity(const std::function<double(double)>& f,
                                     double a, double first_window,
                                     double rel_tol, int max_windows = 60);

} // namespace casimir
