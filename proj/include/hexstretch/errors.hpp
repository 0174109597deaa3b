#pragma once

#include <stdexcept>
#include <string>

namespace hexstretch {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

// A construction that lands exactly on a degenerate boundary of the domain
// (ideal-triangle limits, infinite strip widths). Distinguished from a plain
// DomainError so callers can branch on the degeneracy deliberately.
struct IdealLimitError : DomainError {
  using DomainError::DomainError;
};

// Degenerate input for which a dedicated constructor exists or that cannot
// be represented at all (coincident points, zero-length edges).
struct DegenerateError : Error {
  using Error::Error;
};

// An iterative solver failed to bracket or converge; the message carries
// diagnostics (bounds tried, residuals seen).
struct ConvergenceError : Error {
  using Error::Error;
};

// A foliation coordinate that names no point of the hexagon.
struct OutOfChartError : Error {
  using Error::Error;
};

// A point handed to a chart lookup that is not inside the hexagon.
struct OutsideHexagonError : Error {
  using Error::Error;
};

// Malformed structured input (JSON shape, field types, reference integrity).
struct SchemaError : Error {
  using Error::Error;
};

}  // namespace hexstretch
