#pragma once

#include <stdexcept>

namespace rdca {

// Base for everything the library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside its documented domain (sizes, ranges, thresholds).
struct InvalidParams : Error {
  using Error::Error;
};

// Two objects built for different capacities were combined.
struct CapacityMismatch : Error {
  using Error::Error;
};

// An internal consistency check failed; indicates a bug, not bad input.
struct InvariantViolation : Error {
  using Error::Error;
};

// Reaction table fails the bistable shape contract; what() names the first
// violated clause.
struct NotBistable : Error {
  using Error::Error;
};

// verify_wave only supports |speed| <= 1 (nothing faster exists).
struct FastSpeedUnsupported : Error {
  using Error::Error;
};

// Window too short for the requested detection margins.
struct WindowTooSmall : Error {
  using Error::Error;
};

// Profile search found more complete profiles than the configured cap.
struct BranchLimitExceeded : Error {
  using Error::Error;
};

// Malformed textual input.
struct ParseError : Error {
  using Error::Error;
};

// Filesystem-level failure (missing file, unreadable stream).
struct IoError : Error {
  using Error::Error;
};

}  // namespace rdca
