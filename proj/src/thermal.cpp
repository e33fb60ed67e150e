#include "casimir/thermal.hpp"

#include <cmath>

namespace casimir {

MatsubaraSum matsubara_sum(const ThermalSpec& thermal,
                           const std::function<double(double)>& f_of_xi,
                           const std::function<double()>& zero_term) {
  if (thermal.T <= 0.0) throw DomainError("matsubara_sum: requires T > 0");
  MatsubaraSum out;
  double sum = 0.5 * zero_term();
  out.terms = 1;
  int quiet = 0;
  double last = 0.0, prev = 0.0;
  for (int m = 1; m <= thermal.max_terms; ++m) {
    prev = last;
    last = f_of_xi(thermal.xi(m));
    sum += last;
    ++out.terms;
    if (std::abs(last) <= thermal.tolerance * std::abs(sum))
      ++quiet;
    else
      quiet = 0;
    if (quiet >= 3) {
      // geometric tail bound from the decay of the last two terms
      double ratio = (std::abs(prev) > 0.0) ? std::abs(last) / std::abs(prev) : 0.0;
      if (ratio < 1.0)
        out.tail_estimate = std::abs(last) * ratio / (1.0 - ratio);
      else
        out.tail_estimate = std::abs(last);
      out.value = k_boltzmann * thermal.T * sum;
      out.tail_estimate *= k_boltzmann * thermal.T;
      return out;
    }
  }
  throw ConvergenceError("matsubara_sum: not converged within max_terms",
                         k_boltzmann * thermal.T * std::abs(last));
}

} // namespace casimir
