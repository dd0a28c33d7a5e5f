#pragma once

#include <stdexcept>
#include <string>

namespace flexrig {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input (graph6, JSON documents, fraction strings).
struct ParseError : Error {
  using Error::Error;
};

// A precondition on the arguments of an operation does not hold.
struct PreconditionError : Error {
  using Error::Error;
};

// NAC enumeration refused because the edge count exceeds the configured cap.
struct EnumerationCapExceeded : Error {
  using Error::Error;
};

// A construction cannot be applied to the given input. This is not a
// refutation of movability.
struct ConstructionInapplicable : Error {
  using Error::Error;
};

// A parametrized motion or a tracked path violates a motion invariant.
struct MotionError : Error {
  using Error::Error;
};

}  // namespace flexrig
