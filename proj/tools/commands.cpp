#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hypersint/bethe.hpp"
#include "hypersint/error.hpp"
#include "hypersint/interbasis.hpp"
#include "hypersint/potential1.hpp"
#include "hypersint/potential2.hpp"

namespace hypersint::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

double to_double(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(v)) throw CliError(2, what + ": '" + s + "' is not a finite number");
  return v;
}

int to_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || v < -1000000 || v > 1000000)
    throw CliError(2, what + ": '" + s + "' is not an integer");
  return int(v);
}

}  // namespace

GridSpec parse_grid(const std::string& s) {
  GridSpec g;
  const auto colon = s.find(':');
  const std::string dims = s.substr(0, colon);
  const auto x = dims.find('x');
  if (x == std::string::npos) throw CliError(2, "--grid expects n1xn2[:lo1,hi1,lo2,hi2], got '" + s + "'");
  g.n1 = to_int(dims.substr(0, x), "--grid n1");
  g.n2 = to_int(dims.substr(x + 1), "--grid n2");
  if (colon != std::string::npos) {
    const auto parts = split(s.substr(colon + 1), ',');
    if (parts.size() != 4) throw CliError(2, "--grid window needs four numbers lo1,hi1,lo2,hi2");
    std::array<double, 4> w{};
    for (int i = 0; i < 4; ++i) w[i] = to_double(parts[i], "--grid window");
    g.window = w;
  }
  return g;
}

SemiHyperbolicParams parse_chart_params(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 3) throw CliError(2, "--chart-params expects a,b,e3");
  return {to_double(parts[0], "--chart-params"), to_double(parts[1], "--chart-params"),
          to_double(parts[2], "--chart-params")};
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  for (const auto& p : split(s, ',')) out.push_back(to_int(p, "--quantum"));
  return out;
}

void validate(const RunConfig& cfg) {
  const std::pair<const char*, const std::optional<double>*> ps[] = {
      {"alpha", &cfg.alpha}, {"beta", &cfg.beta}, {"gamma", &cfg.gamma}};
  for (auto [name, v] : ps) {
    if (!v->has_value()) throw CliError(2, std::string("missing --") + name);
    if (!(**v > 0) || !std::isfinite(**v)) throw CliError(2, std::string("--") + name + " must be positive and finite");
  }
  if (cfg.potential == Potential::v2 && cfg.chart != Chart::equidistant && cfg.chart != Chart::semi_hyperbolic)
    throw CliError(2, "chart " + std::string(to_string(cfg.chart)) + " is not separable for v2");
  if (cfg.potential == Potential::v1 && cfg.chart == Chart::semi_hyperbolic)
    throw CliError(2, "chart semi-hyperbolic is not separable for v1");
  if (cfg.chart_params.b == 0) throw CliError(2, "--chart-params needs b != 0");
  if (cfg.grid.n1 < 1 || cfg.grid.n2 < 1 || cfg.grid.n1 > 10000 || cfg.grid.n2 > 10000)
    throw CliError(2, "--grid sizes must lie in 1..10000");
  if (!(cfg.diff_step > 0 && cfg.diff_step <= 0.25)) throw CliError(2, "--diff-step must lie in (0, 0.25]");
  if (cfg.quad_level < 2 || cfg.quad_level > 12) throw CliError(2, "--quad-level must lie in 2..12");
  if (!(cfg.root_tol > 0)) throw CliError(2, "--root-tol must be positive");
  if (cfg.N && *cfg.N < 0) throw CliError(2, "--N must be non-negative");
}

Meta base_meta(const RunConfig& cfg, const std::string& command) {
  Meta m;
  m["command"] = command;
  m["potential"] = cfg.potential == Potential::v1 ? "v1" : "v2";
  m["alpha"] = *cfg.alpha;
  m["beta"] = *cfg.beta;
  m["gamma"] = *cfg.gamma;
  m["chart"] = to_string(cfg.chart);
  if (cfg.chart == Chart::semi_hyperbolic)
    m["chart_params"] = {cfg.chart_params.a, cfg.chart_params.b, cfg.chart_params.e3};
  return m;
}

namespace {

std::uint64_t seed() { return env_seed(); }

RootOptions root_options(const RunConfig& cfg) { return {cfg.root_tol, seed()}; }

ZeroForm form(const RunConfig& cfg) { return cfg.printed ? ZeroForm::printed : ZeroForm::derived; }

P1Params p1(const RunConfig& cfg) { return P1Params::make(*cfg.alpha, *cfg.beta, *cfg.gamma); }
P2Params p2(const RunConfig& cfg) { return P2Params::make(*cfg.alpha, *cfg.beta, *cfg.gamma); }

int level_count(const RunConfig& cfg) {
  return cfg.potential == Potential::v1 ? p1(cfg).nmax : p2(cfg).nmax;
}

void require_level(const RunConfig& cfg, int N) {
  const int nmax = level_count(cfg);
  if (N < 0 || N > nmax)
    throw CliError(2, "level N = " + std::to_string(N) + " outside the bound window 0.." + std::to_string(nmax));
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

Table cmd_spectrum(const RunConfig& cfg) {
  Table t;
  t.meta = base_meta(cfg, "spectrum");
  t.columns = {"N", "E", "degeneracy", "q1", "q2", "separation", "status"};
  const bool one = cfg.potential == Potential::v1;
  const P1Params a = p1(cfg);
  const P2Params b = p2(cfg);
  const int nmax = one ? a.nmax : b.nmax;
  const char* sep_name = "mu";
  switch (cfg.chart) {
    case Chart::horicyclic: sep_name = "lambda1"; break;
    case Chart::elliptic_parabolic: sep_name = "lambda"; break;
    case Chart::hyperbolic_parabolic: sep_name = "tau"; break;
    case Chart::semi_hyperbolic: sep_name = "lambda"; break;
    default: break;
  }
  t.meta["separation"] = sep_name;
  int levels = 0;
  for (int N = 0; N <= nmax; ++N) {
    double E = 0;
    try {
      E = one ? p1_energy(a, N) : p2_energy(b, N);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::threshold_state) throw;
      t.meta["threshold_level"] = N;
      break;
    }
    ++levels;
    const auto states = one ? p1_level_states(a, N) : p2_level_states(b, N);
    const std::int64_t deg = std::int64_t(states.size());
    auto row = [&](int q1, int q2, double sep) {
      t.add({std::int64_t(N), E, deg, std::int64_t(q1), std::int64_t(q2), sep, std::string("bound")});
    };
    switch (cfg.chart) {
      case Chart::equidistant:
        for (auto [n, m] : states) row(n, m, one ? p1_mu(a, m) : p2_mu(b, m));
        break;
      case Chart::horicyclic:
        for (int n1 = 0; n1 <= N; ++n1) row(n1, N - n1, p1_lambda1(a, n1));
        break;
      case Chart::elliptic_parabolic:
      case Chart::hyperbolic_parabolic: {
        const bool ep = cfg.chart == Chart::elliptic_parabolic;
        const auto roots = ep ? p1_ep_roots(a, N, ZeroForm::derived, root_options(cfg))
                              : p1_hp_roots(a, N, ZeroForm::derived, root_options(cfg));
        for (const auto& r : roots) {
          if (!r.in_zones) continue;
          row(r.zone_counts[0], r.zone_counts[1], ep ? p1_ep_lambda(a, r.roots) : p1_hp_tau(a, r.roots));
        }
        break;
      }
      case Chart::semi_hyperbolic: {
        const auto roots = p2_sh_roots(b, N, cfg.chart_params, cfg.root_tol, seed());
        for (std::size_t k = 0; k < roots.size(); ++k)
          row(int(k), -1, p2_sh_lambda(b, cfg.chart_params, roots[k].roots).real());
        break;
      }
    }
  }
  t.meta["levels"] = levels;
  if (levels == 0) t.add({std::int64_t(-1), NAN, std::int64_t(0), std::int64_t(-1), std::int64_t(-1), NAN,
                          std::string("no bound states")});
  return t;
}

namespace {

std::array<double, 4> default_window(const RunConfig& cfg) {
  const double e3 = cfg.chart_params.e3;
  switch (cfg.chart) {
    case Chart::equidistant: return {-3, 3, -3, 3};
    case Chart::horicyclic: return {-4, 4, 0.05, 4};
    case Chart::elliptic_parabolic: return {0.05, 3, -1.5, 1.5};
    case Chart::hyperbolic_parabolic: return {0.05, 3, 0.05, 1.5};
    case Chart::semi_hyperbolic: return {e3 + 0.05, e3 + 5, e3 - 5, e3 - 0.05};
  }
  return {};
}

double grid_value(double lo, double hi, int n, int i) { return n == 1 ? lo : lo + (hi - lo) * i / (n - 1); }

void require_quantum(const RunConfig& cfg, std::size_t n, const char* labels) {
  if (cfg.quantum.size() != n)
    throw CliError(2, std::string("--quantum expects ") + labels + " for chart " + to_string(cfg.chart));
  for (int q : cfg.quantum)
    if (q < 0) throw CliError(2, "--quantum entries must be non-negative");
}

}  // namespace

Table cmd_wavefunction(const RunConfig& cfg) {
  Table t;
  t.meta = base_meta(cfg, "wavefunction");
  t.columns = {"u1", "u2", "re", "im", "abs2"};
  const std::array<double, 4> w = cfg.grid.window.value_or(default_window(cfg));
  for (double u1 : {w[0], w[1]})
    for (double u2 : {w[2], w[3]})
      if (!in_chart_domain(ChartPoint{cfg.chart, u1, u2, cfg.chart_params, false}))
        throw CliError(2, "grid window corner (" + format_double(u1) + ", " + format_double(u2) +
                              ") lies outside the " + to_string(cfg.chart) + " domain");

  int N = 0;
  std::function<cplx(double, double)> eval;
  const P1Params a = p1(cfg);
  const P2Params b = p2(cfg);
  if (cfg.chart == Chart::semi_hyperbolic) {
    require_quantum(cfg, 1, "j (root configuration index)");
    if (!cfg.N) throw CliError(2, "semi-hyperbolic states need --N");
    N = *cfg.N;
    require_level(cfg, N);
    if (cfg.quantum[0] > N) throw CliError(2, "configuration index outside 0..N");
  } else {
    require_quantum(cfg, 2, cfg.chart == Chart::equidistant          ? "n,m"
                            : cfg.chart == Chart::horicyclic         ? "n1,n2"
                            : cfg.chart == Chart::elliptic_parabolic ? "p,q"
                                                                     : "l,k");
    N = cfg.quantum[0] + cfg.quantum[1];
    if (cfg.N && *cfg.N != N) throw CliError(2, "--N disagrees with the sum of --quantum");
    require_level(cfg, N);
  }
  const int q1 = cfg.quantum[0], q2 = cfg.quantum.size() > 1 ? cfg.quantum[1] : 0;
  t.meta["N"] = N;
  t.meta["quantum"] = cfg.quantum;
  t.meta["E"] = cfg.potential == Potential::v1 ? p1_energy(a, N) : p2_energy(b, N);

  std::optional<ParabolicState> ps;
  std::optional<SemiHyperbolicState> ss;
  if (cfg.potential == Potential::v1) {
    switch (cfg.chart) {
      case Chart::equidistant:
        if (q2 > p1_m_max(a)) throw CliError(2, "m outside the separation window 0.." + std::to_string(p1_m_max(a)));
        t.meta["normalization"] = "unit norm on w2 > 0, measure cosh(u1) du1 du2";
        eval = [&](double x, double y) { return cplx(p1_wf_equidistant(a, N - q2, q2, x, y)); };
        break;
      case Chart::horicyclic:
        t.meta["normalization"] = "unit norm on w2 > 0, measure du1 du2 / u2^2";
        eval = [&](double x, double y) { return cplx(p1_wf_horicyclic(a, q1, q2, x, y)); };
        break;
      case Chart::elliptic_parabolic:
        ps = p1_ep_state(a, N, q1, q2, root_options(cfg), cfg.quad_level);
        t.meta["normalization"] = "unit norm by chart quadrature";
        t.meta["separation"] = ps->separation;
        eval = [&](double x, double y) { return cplx(p1_wf_elliptic_parabolic(*ps, x, y)); };
        break;
      case Chart::hyperbolic_parabolic:
        ps = p1_hp_state(a, N, q1, q2, root_options(cfg), cfg.quad_level);
        t.meta["normalization"] = "unit norm by chart quadrature";
        t.meta["separation"] = ps->separation;
        eval = [&](double x, double y) { return cplx(p1_wf_hyperbolic_parabolic(*ps, x, y)); };
        break;
      default: break;
    }
    if (ps) {
      std::vector<double> r;
      for (cplx z : ps->roots.roots) r.push_back(z.real());
      t.meta["roots"] = r;
      t.meta["root_residual"] = ps->roots.residual;
    }
  } else if (cfg.chart == Chart::equidistant) {
    if (q2 > p2_m_max(b)) throw CliError(2, "m outside the separation window 0.." + std::to_string(p2_m_max(b)));
    t.meta["normalization"] = "unit norm on w2 > 0, measure cosh(u1) du1 du2";
    eval = [&](double x, double y) { return p2_wf_equidistant(b, N - q2, q2, x, y); };
  } else {
    ss = p2_sh_state(b, N, q1, cfg.chart_params, seed(), cfg.root_tol);
    t.meta["normalization"] = "unnormalized product form, global phase fixed at a reference point";
    t.meta["separation"] = ss->lambda.real();
    t.meta["root_residual"] = ss->roots.residual;
    eval = [&](double x, double y) {
      return p2_wf_semihyperbolic(*ss, chart_to_ambient(ChartPoint{Chart::semi_hyperbolic, x, y, cfg.chart_params, false}));
    };
  }
  t.meta["grid"] = {cfg.grid.n1, cfg.grid.n2};
  t.meta["window"] = w;
  for (int i = 0; i < cfg.grid.n1; ++i)
    for (int j = 0; j < cfg.grid.n2; ++j) {
      const double u1 = grid_value(w[0], w[1], cfg.grid.n1, i);
      const double u2 = grid_value(w[2], w[3], cfg.grid.n2, j);
      const cplx v = eval(u1, u2);
      t.add({u1, u2, v.real(), v.imag(), std::norm(v)});
    }
  return t;
}

Table cmd_roots(const RunConfig& cfg) {
  Table t;
  t.meta = base_meta(cfg, "roots");
  if (!cfg.N) throw CliError(2, "roots need --N");
  const int N = *cfg.N;
  require_level(cfg, N);
  t.meta["N"] = N;
  t.meta["accept"] = cfg.root_tol;
  t.columns = {"config", "zone_counts", "residual", "separation_re", "separation_im", "root", "re", "im"};
  auto emit = [&](int k, const BetheRoots& r, cplx sep) {
    const std::string zc = join(r.zone_counts);
    if (r.roots.empty()) t.add({std::int64_t(k), zc, r.residual, sep.real(), sep.imag(), std::int64_t(-1), NAN, NAN});
    for (std::size_t i = 0; i < r.roots.size(); ++i)
      t.add({std::int64_t(k), zc, r.residual, sep.real(), sep.imag(), std::int64_t(i), r.roots[i].real(),
             r.roots[i].imag()});
  };
  if (cfg.chart == Chart::elliptic_parabolic || cfg.chart == Chart::hyperbolic_parabolic) {
    const P1Params a = p1(cfg);
    const bool ep = cfg.chart == Chart::elliptic_parabolic;
    t.meta["form"] = cfg.printed ? "printed" : "derived";
    const auto all = ep ? p1_ep_roots(a, N, form(cfg), root_options(cfg)) : p1_hp_roots(a, N, form(cfg), root_options(cfg));
    for (std::size_t k = 0; k < all.size(); ++k) {
      // the separation constant formula belongs to the derived equations
      const double sep = cfg.printed ? NAN : ep ? p1_ep_lambda(a, all[k].roots) : p1_hp_tau(a, all[k].roots);
      emit(int(k), all[k], sep);
    }
  } else if (cfg.chart == Chart::semi_hyperbolic) {
    const P2Params b = p2(cfg);
    const auto all = p2_sh_roots(b, N, cfg.chart_params, cfg.root_tol, seed());
    for (std::size_t k = 0; k < all.size(); ++k)
      emit(int(k), all[k], cfg.printed ? p2_sh_lambda_printed(b, cfg.chart_params, all[k].roots)
                                       : p2_sh_lambda(b, cfg.chart_params, all[k].roots));
  } else {
    throw CliError(2, "roots need chart elliptic-parabolic, hyperbolic-parabolic or semi-hyperbolic");
  }
  return t;
}

Table cmd_interbasis(const RunConfig& cfg) {
  if (cfg.potential != Potential::v1) throw CliError(2, "interbasis expansions are defined for v1 only");
  Table t;
  t.meta = base_meta(cfg, "interbasis");
  t.meta.erase("chart");
  t.meta["form"] = cfg.printed ? "printed" : "derived";
  t.columns = {"N", "method", "n1", "m", "re", "im"};
  const P1Params a = p1(cfg);
  int lo = 0, hi = a.nmax;
  if (cfg.N) {
    require_level(cfg, *cfg.N);
    lo = hi = *cfg.N;
  }
  for (int N = lo; N <= hi; ++N)
    for (IbMethod m : {IbMethod::quadrature, IbMethod::hyp3f2, IbMethod::hahn}) {
      Eigen::MatrixXcd W;
      if (cfg.printed)
        W = ib_matrix_printed(a, N, m);
      else
        W = ib_matrix(a, N, m).W.cast<cplx>();
      for (int i = 0; i <= N; ++i)
        for (int j = 0; j <= N; ++j)
          t.add({std::int64_t(N), std::string(to_string(m)), std::int64_t(i), std::int64_t(j), W(i, j).real(),
                 W(i, j).imag()});
    }
  return t;
}

}  // namespace hypersint::cli
