#pragma once

#include <stdexcept>
#include <string>

namespace ptc {

/// Scenario file could not be read or is syntactically malformed.
/// Maps to CLI exit status 2.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Scenario content violates a field invariant or an analysis precondition.
/// Maps to CLI exit status 3.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Output directory or file could not be written. Maps to CLI exit status 4.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

/// The log-log slope fit used by the singularity classifier has residual
/// above threshold, so no classification is trustworthy.
struct InconclusiveFitError : std::runtime_error {
  explicit InconclusiveFitError(const std::string& msg)
      : std::runtime_error(msg) {}
};

}  // namespace ptc
