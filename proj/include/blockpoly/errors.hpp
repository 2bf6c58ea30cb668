#pragma once

#include <stdexcept>
#include <string>

namespace blockpoly {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-square matrix where a square one is required.
struct DimensionError : Error {
  using Error::Error;
};

// Precondition violation on otherwise well-formed input
// (unknown vertex id, wrong cut-vertex count, mode mismatch, ...).
struct DomainError : Error {
  using Error::Error;
};

// Input exceeds a documented size cap (oracle order caps, expansion caps).
struct SizeError : Error {
  using Error::Error;
};

// Malformed input file. Carries a 1-based line and column when known (0 = unknown).
struct FormatError : Error {
  int line = 0;
  int column = 0;
  FormatError(const std::string& msg, int line_ = 0, int column_ = 0)
      : Error(line_ > 0 ? msg + " (line " + std::to_string(line_) +
                              (column_ > 0 ? ", column " + std::to_string(column_) : std::string()) + ")"
                        : msg),
        line(line_),
        column(column_) {}
};

// Invalid run configuration (unsupported mode for the given input, bad flag combination).
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace blockpoly
