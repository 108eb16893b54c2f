#pragma once

#include <stdexcept>
#include <string>

namespace treebij {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad argument values or malformed input data.
struct InputError : Error {
  using Error::Error;
};

// Request exceeds the exhaustive-enumeration cap.
struct CapacityError : Error {
  using Error::Error;
};

// A (partition, permutation) pair that is not the code of any rooted tree.
// `step` is the 1-based decode step that could not be completed.
struct DecodeError : Error {
  int step;
  DecodeError(int step_, const std::string& msg) : Error(msg), step(step_) {}
};

// Chains and cut matrix that do not assemble into a single rooted tree.
struct AssemblyError : Error {
  using Error::Error;
};

// Internal consistency check failed; indicates a bug, not bad input.
struct InvariantViolation : Error {
  using Error::Error;
};

}  // namespace treebij
