#include "hypersint/error.hpp"

namespace hypersint {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::pole: return "pole-at-nonpositive-integer";
    case ErrorKind::parameter_pole: return "parameter-pole";
    case ErrorKind::no_convergence: return "no-convergence";
    case ErrorKind::nonfinite: return "nonfinite";
    case ErrorKind::quadrature_failure: return "quadrature-failure";
    case ErrorKind::domain: return "out-of-domain";
    case ErrorKind::singular_configuration: return "singular-configuration";
    case ErrorKind::no_bound_state: return "no-bound-state";
    case ErrorKind::threshold_state: return "threshold-state";
    case ErrorKind::out_of_window: return "out-of-window";
    case ErrorKind::solver_failure: return "solver-failure";
    case ErrorKind::invalid_argument: return "invalid-argument";
  }
  return "unknown";
}

}  // namespace hypersint
