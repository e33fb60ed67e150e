#include "casimir/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace casimir {

static GaussRule make_rule(int n) {
  GaussRule r;
  r.x.resize(n);
  r.w.resize(n);
  // Newton iteration on P_n, starting from the Chebyshev-like estimate.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.x[i] = -x;
    r.x[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    r.w[i] = w;
    r.w[n - 1 - i] = w;
  }
  return r;
}

const GaussRule& gauss_legendre(int n) {
  static std::map<int, GaussRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_rule(n)).first;
  return it->second;
}

double gauss_panel(const std::function<double(double)>& f, double a, double b,
                   int n) {
  const GaussRule& r = gauss_legendre(n);
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += r.w[i] * f(mid + half * r.x[i]);
  return s * half;
}

namespace {

struct Panel {
  double a, b, coarse;
  int depth;
};

} // namespace

AdaptiveResult integrate_adaptive(const std::function<double(double)>& f,
                                  double a, double b, double rel_tol,
                                  double abs_tol, int max_depth, int n) {
  AdaptiveResult res;
  if (a == b) return res;
  std::vector<Panel> stack;
  stack.push_back({a, b, gauss_panel(f, a, b, n), 0});
  res.evaluations += n;
  // first sweep to get a scale for the tolerance test
  double scale = std::abs(stack.front().coarse);
  while (!stack.empty()) {
    Panel p = stack.back();
    stack.pop_back();
    double fine = gauss_panel(f, p.a, p.b, 2 * n);
    res.evaluations += 2 * n;
    double err = std::abs(fine - p.coarse);
    double tol = std::max(abs_tol, rel_tol * std::max(scale, std::abs(res.value) + std::abs(fine)));
    if (err <= tol || p.depth >= max_depth) {
      res.value += fine;
      res.error += err;
      if (p.depth >= max_depth && err > tol) res.converged = false;
    } else {
      double mid = 0.5 * (p.a + p.b);
      double c1 = gauss_panel(f, p.a, mid, n);
      double c2 = gauss_panel(f, mid, p.b, n);
      res.evaluations += 2 * n;
      stack.push_back({p.a, mid, c1, p.depth + 1});
      stack.push_back({mid, p.b, c2, p.depth + 1});
      scale = std::max(scale, std::abs(c1) + std::abs(c2));
    }
  }
  return res;
}

AdaptiveResult integrate_to_infinity(const std::function<double(double)>& f,
                                     double a, double first_window,
                                     double rel_tol, int max_windows) {
  AdaptiveResult total;
  double lo = a, w = first_window;
  int quiet = 0;
  for (int i = 0; i < max_windows; ++i) {
    AdaptiveResult part = integrate_adaptive(f, lo, lo + w, rel_tol);
    total.value += part.value;
    total.error += part.error;
    total.evaluations += part.evaluations;
    total.converged = total.converged && part.converged;
    if (std::abs(part.value) <= rel_tol * std::abs(total.value))
      ++quiet;
    else
      quiet = 0;
    if (quiet >= 2) return total;
    lo += w;
    w *= 2.0;
  }
  total.converged = false;
  return total;
}

} // namespace casimir
