// Exception types.  Every error carries a short machine-parseable category
// (used by the CLI for exit-status mapping) plus a human-readable message.

#pragma once

#include <stdexcept>
#include <string>

namespace thzdra {

class Error : public std::runtime_error {
 public:
  Error(std::string category, const std::string& message)
      : std::runtime_error(message), category_(std::move(category)) {}

  const std::string& category() const noexcept { return category_; }

 private:
  std::string category_;
};

// Invalid parameter or a value outside the physical domain.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message)
      : Error("domain", message) {}
};

// Quadrature or other numerical procedure failed to reach its tolerance.
class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& message)
      : Error("numerical", message) {}
};

// Iterative root search did not converge; message embeds the iterate trace.
class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& message)
      : Error("convergence", message) {}
};

// Resonator mode evaluated below its cutoff frequency.
class CutoffError : public Error {
 public:
  explicit CutoffError(const std::string& message)
      : Error("cutoff", message) {}
};

// No root found inside the scanned window.
class NotFoundError : public Error {
 public:
  explicit NotFoundError(const std::string& message)
      : Error("not-found", message) {}
};

// Config or unit-suffix parse failure.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message)
      : Error("parse", message) {}
};

}  // namespace thzdra
