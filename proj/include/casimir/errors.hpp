#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

// Bad argument or precondition violation (xi < 0, eps < 1, ...).
class DomainError : public std::invalid_argument {
public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A sum or quadrature failed to reach its tolerance within budget.
// Carries the best available tail / error estimate.
class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string& what, double tail)
      : std::runtime_error(what), tail_estimate(tail) {}
  double tail_estimate = 0.0;
};

// Numerical breakdown (overflow, recurrence failure, spectral radius >= 1).
class NumericError : public std::runtime_error {
public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file (material table, config).
class LoadError : public std::runtime_error {
public:
  explicit LoadError(const std::string& what) : std::runtime_error(what) {}
};

// Operation not defined for the given model variant.
class NotApplicableError : public std::logic_error {
public:
  explicit NotApplicableError(const std::string& what) : std::logic_error(what) {}
};

} // namespace casimir
