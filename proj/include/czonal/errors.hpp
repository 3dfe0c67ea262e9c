#pragma once

#include <stdexcept>
#include <string>

namespace czonal {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// n = 1 (the circle) and anything below is rejected everywhere: the disc
// weight (1-|w|^2)^(n-2) and the alpha = n-2 factorials need n >= 2.
struct DimensionError : Error {
  using Error::Error;
};

// A series tail that cannot be bounded: no tail certificate and the Taylor
// table ran out before the stopping rule fired.
struct ConvergenceError : Error {
  using Error::Error;
};

// The exact linear solver hit a singular pivot. The decomposition system is
// provably nonsingular, so this always means an implementation bug.
struct SingularSystemError : Error {
  using Error::Error;
};

}  // namespace czonal
