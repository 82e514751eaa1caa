#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "hypersint/error.hpp"

using namespace hypersint;
using namespace hypersint::cli;

namespace {

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::no_convergence:
    case ErrorKind::solver_failure:
    case ErrorKind::quadrature_failure:
    case ErrorKind::nonfinite: return 3;
    default: return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Superintegrable systems on the two-dimensional hyperboloid"};
  app.set_config("--config", "", "key=value file; command-line flags take precedence");
  // values such as quantum=1,0 stay whole
  auto ini = std::make_shared<CLI::ConfigTOML>();
  ini->arrayDelimiter(';');
  app.config_formatter(ini);
  app.require_subcommand(1, 1);

  std::string potential = "v1", chart = "equidistant", chart_params, quantum, grid, fmt = "json", form = "derived";
  RunConfig cfg;
  app.add_option("--potential", potential, "v1 or v2")->check(CLI::IsMember({"v1", "v2"}));
  app.add_option("--alpha", cfg.alpha);
  app.add_option("--beta", cfg.beta);
  app.add_option("--gamma", cfg.gamma);
  app.add_option("--chart", chart, "equidistant, horicyclic, elliptic-parabolic, hyperbolic-parabolic, semi-hyperbolic");
  app.add_option("--chart-params", chart_params, "a,b,e3 for the semi-hyperbolic chart");
  app.add_option("--N", cfg.N, "level");
  app.add_option("--quantum", quantum, "comma-separated quantum numbers");
  app.add_option("--grid", grid, "n1xn2[:lo1,hi1,lo2,hi2]");
  app.add_option("--quad-level", cfg.quad_level);
  app.add_option("--diff-step", cfg.diff_step);
  app.add_option("--root-tol", cfg.root_tol, "accepted zero-equation residual");
  app.add_option("--form", form, "derived or printed zero equations and coefficients")
      ->check(CLI::IsMember({"derived", "printed"}));
  app.add_option("--suite", cfg.suite,
                 "orthonormality, eigen, linear-relations, quadratic-algebra, interbasis, cross-chart or all");
  app.add_option("--format", fmt)->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", cfg.out, "output file, stdout when absent");

  for (const char* name : {"spectrum", "wavefunction", "roots", "interbasis", "verify"})
    app.add_subcommand(name)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();

  try {
    cfg.potential = potential == "v1" ? Potential::v1 : Potential::v2;
    cfg.chart = chart_from_string(chart);
    if (!chart_params.empty()) cfg.chart_params = parse_chart_params(chart_params);
    if (!quantum.empty()) cfg.quantum = parse_ints(quantum);
    if (!grid.empty()) cfg.grid = parse_grid(grid);
    cfg.printed = form == "printed";
    cfg.format = fmt == "csv" ? Format::csv : Format::json;
    validate(cfg);

    Table t;
    bool hard_ok = true;
    if (cmd == "spectrum") t = cmd_spectrum(cfg);
    if (cmd == "wavefunction") t = cmd_wavefunction(cfg);
    if (cmd == "roots") t = cmd_roots(cfg);
    if (cmd == "interbasis") t = cmd_interbasis(cfg);
    if (cmd == "verify") t = cmd_verify(cfg, hard_ok);
    write_atomic(cfg.out, render(t, cfg.format));
    if (!hard_ok) {
      std::cerr << "verify: hard checks failed\n";
      return 1;
    }
    return 0;
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
