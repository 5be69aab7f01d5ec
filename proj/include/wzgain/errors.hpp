#pragma once

#include <stdexcept>

namespace wzgain {

// A file could not be read, or its contents are not structurally parseable.
// Value-level validation problems (bad sums, negative entries, out-of-range
// parameters) use std::invalid_argument instead.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A search ran out of admissible candidates without meeting its target.
// The message reports the best values achieved so the caller can tell
// "target unreachable" from "target barely missed".
struct SearchExhaustedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The requested distortion budget cannot be met even by the most informative
// channel available to the solver.
struct InfeasibleDistortionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace wzgain
