#ifndef QINCOMPAT_ERRORS_HPP
#define QINCOMPAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qincompat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeError : Error {
  using Error::Error;
};

struct SizeLimit : Error {
  using Error::Error;
};

struct NotHermitian : Error {
  using Error::Error;
};

struct NotTracePreserving : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

// Carries the name of the violated invariant and the numeric residual.
struct ValidationError : Error {
  std::string invariant;
  double residual;
  ValidationError(const std::string& inv, double res)
      : Error("validation failed: " + inv + " (residual " + std::to_string(res) + ")"),
        invariant(inv),
        residual(res) {}
};

struct SolverError : Error {
  using Error::Error;
};

}  // namespace qincompat

#endif
