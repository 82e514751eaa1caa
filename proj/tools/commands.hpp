#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypersint/geometry.hpp"
#include "output.hpp"

namespace hypersint::cli {

enum class Potential { v1, v2 };

struct GridSpec {
  int n1 = 41, n2 = 41;
  std::optional<std::array<double, 4>> window;  // lo1, hi1, lo2, hi2
};

struct RunConfig {
  Potential potential = Potential::v1;
  std::optional<double> alpha, beta, gamma;
  Chart chart = Chart::equidistant;
  SemiHyperbolicParams chart_params{0.0, 1.0, 0.0};
  std::optional<int> N;
  std::vector<int> quantum;
  GridSpec grid;
  int quad_level = 7;
  double diff_step = 1e-2;
  double root_tol = 1e-10;
  bool printed = false;  // --form printed
  std::string suite = "all";
  Format format = Format::json;
  std::string out;
};

// exit 2 for config and parameter errors, 3 for solver failures
class CliError : public std::runtime_error {
 public:
  CliError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const noexcept { return code_; }

 private:
  int code_;
};

GridSpec parse_grid(const std::string& s);
SemiHyperbolicParams parse_chart_params(const std::string& s);
std::vector<int> parse_ints(const std::string& s);

void validate(const RunConfig& cfg);

Table cmd_spectrum(const RunConfig& cfg);
Table cmd_wavefunction(const RunConfig& cfg);
Table cmd_roots(const RunConfig& cfg);
Table cmd_interbasis(const RunConfig& cfg);
// hard_ok is false when a hard check failed
Table cmd_verify(const RunConfig& cfg, bool& hard_ok);

Meta base_meta(const RunConfig& cfg, const std::string& command);

}  // namespace hypersint::cli
