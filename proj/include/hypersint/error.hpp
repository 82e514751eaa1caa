#pragma once

#include <stdexcept>
#include <string>

namespace hypersint {

enum class ErrorKind {
  pole,
  parameter_pole,
  no_convergence,
  nonfinite,
  quadrature_failure,
  domain,
  singular_configuration,
  no_bound_state,
  threshold_state,
  out_of_window,
  solver_failure,
  invalid_argument,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hypersint
