#include "hypersint/potential1.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hypersint/error.hpp"
#include "hypersint/specfun.hpp"
#include "polylog.hpp"

namespace hypersint {

using detail::log_cosh;
using detail::log_sinh;

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

void require_positive(double v, const char* name) {
  if (!(v > 0) || !std::isfinite(v))
    throw Error(ErrorKind::invalid_argument, std::string(name) + " must be a positive finite number");
}

}  // namespace

P1Params P1Params::make(double alpha, double beta, double gamma) {
  require_positive(alpha, "alpha");
  require_positive(beta, "beta");
  require_positive(gamma, "gamma");
  P1Params p;
  p.alpha = alpha;
  p.beta = beta;
  p.gamma = gamma;
  p.d = std::sqrt(2 * alpha * alpha + 0.25);
  p.c = std::sqrt(2.0) * beta;
  p.s = gamma * gamma / p.c;
  const double top = (p.s - p.d - 2) / 2;
  p.nmax = top < 0 ? -1 : int(std::floor(top));
  return p;
}

double v1_ambient(const P1Params& p, const AmbientPoint& q) {
  const double dm = q.w0 - q.w1;
  if (q.w2 == 0 || dm == 0) throw Error(ErrorKind::singular_configuration, "V1 needs w2 != 0 and w0 != w1");
  return p.alpha * p.alpha / (q.w2 * q.w2) - p.gamma * p.gamma / (dm * dm) +
         p.beta * p.beta * (q.w0 + q.w1) / (dm * dm * dm);
}

double v1_equidistant(const P1Params& p, double t1, double t2) {
  const double sh = std::sinh(t1), ch = std::cosh(t1), e = std::exp(-t2);
  return p.alpha * p.alpha / (sh * sh) +
         (p.beta * p.beta - p.gamma * p.gamma * e * e) / (e * e * e * e) / (ch * ch);
}

double v1_horicyclic(const P1Params& p, double x, double y) {
  return y * y * (p.alpha * p.alpha / (x * x) + p.beta * p.beta * (x * x + y * y) - p.gamma * p.gamma);
}

double p1_q(const P1Params& p, int N) {
  if (N < 0 || N > p.nmax)
    throw Error(ErrorKind::no_bound_state,
                "level N = " + std::to_string(N) + " outside 0.." + std::to_string(p.nmax));
  const double q = p.s - p.d - 2 * N - 2;
  if (q <= 1e-12)
    throw Error(ErrorKind::threshold_state, "level N = " + std::to_string(N) + " sits at E = 1/8");
  return q;
}

double p1_energy(const P1Params& p, int N) {
  const double q = p1_q(p, N);
  return -0.5 * q * q + 0.125;
}

int p1_m_max(const P1Params& p) {
  const double t = (p.s - 1) / 2;
  return t < 0 ? -1 : int(std::floor(t));
}

double p1_mu(const P1Params& p, int m) {
  if (m < 0 || m > p1_m_max(p))
    throw Error(ErrorKind::out_of_window, "m = " + std::to_string(m) + " outside 0.." + std::to_string(p1_m_max(p)));
  return p.s - 2 * m - 1;
}

std::vector<std::array<int, 2>> p1_level_states(const P1Params& p, int N) {
  p1_q(p, N);
  std::vector<std::array<int, 2>> out;
  for (int m = 0; m <= N; ++m) {
    const int n = N - m;
    const double mu = p1_mu(p, m);
    if (mu - p.d - 2 * n - 1 <= 0) continue;
    out.push_back({n, m});
  }
  return out;
}

double p1_lambda1(const P1Params& p, int n1) { return p.c / (p.gamma * p.gamma) * (2 * n1 + p.d + 1) - 1; }

double p1_lambda2(const P1Params& p, int n2, double q) { return p.c / (p.gamma * p.gamma) * (2 * n2 + q + 1) + 1; }

double p1_energy_horicyclic(const P1Params& p, int N) {
  p1_q(p, N);
  // lambda1 + lambda2 = 1 is linear in q: (c/g^2)(2N + d + q + 2) = 1
  const double q = p.gamma * p.gamma / p.c - 2 * N - p.d - 2;
  return -0.5 * q * q + 0.125;
}

double p1_energy_elliptic_parabolic(const P1Params& p, int N) {
  p1_q(p, N);
  const double q = -(p.d + 2 * N + 2 - p.gamma * p.gamma / (std::sqrt(2.0) * p.beta));
  return -0.5 * (q * q - 0.25);
}

double p1_s1(const P1Params& p, int n, double mu, double t1) {
  const double d = p.d;
  const double gap = mu - d - 2 * n - 1;
  if (n < 0 || gap <= 0) throw Error(ErrorKind::out_of_window, "Poschl-Teller index n outside its window");
  return detail::pt_factor(d, n, mu, t1);
}

double p1_s2(const P1Params& p, int m, double t2) {
  const double mu = p1_mu(p, m);
  const double logz = std::log(p.c) + 2 * t2;
  if (logz > std::log(1e5)) return 0.0;
  const double z = std::exp(logz);
  const double lognorm = 0.5 * (std::log(2 * mu) + log_gamma(m + 1.0) - log_gamma(m + mu + 1));
  int sg = 1;
  const double ll = detail::log_abs_laguerre(m, mu, z, &sg);
  return sg * std::exp(lognorm - z / 2 + mu / 2 * logz + ll);
}

double p1_wf_equidistant(const P1Params& p, int n, int m, double t1, double t2) {
  p1_q(p, n + m);
  const double mu = p1_mu(p, m);
  return std::exp(-0.5 * log_cosh(t1)) * p1_s1(p, n, mu, t1) * p1_s2(p, m, t2);
}

double p1_psi1(const P1Params& p, int n1, double x) {
  if (n1 < 0) throw Error(ErrorKind::out_of_window, "n1 < 0");
  if (x == 0) return 0.0;
  const double u = p.c * x * x;
  if (u > 1e5) return 0.0;
  const double lognorm = 0.5 * (std::log(2.0) + log_gamma(n1 + 1.0) + 0.5 * std::log(p.c) - log_gamma(n1 + p.d + 1));
  int sg = 1;
  const double ll = detail::log_abs_laguerre(n1, p.d, u, &sg);
  return sg * std::exp(lognorm - u / 2 + (0.5 + p.d) / 2 * std::log(u) + ll);
}

double p1_psi2(const P1Params& p, int n2, int N, double y) {
  if (n2 < 0 || n2 > N) throw Error(ErrorKind::out_of_window, "n2 outside 0..N");
  if (!(y > 0)) throw Error(ErrorKind::domain, "horicyclic y must be positive");
  const double q = p1_q(p, N);
  const double u = p.c * y * y;
  if (u > 1e5) return 0.0;
  const double lognorm = 0.5 * (std::log(2 * q) + log_gamma(n2 + 1.0) - 0.5 * std::log(p.c) - log_gamma(n2 + q + 1));
  int sg = 1;
  const double ll = detail::log_abs_laguerre(n2, q, u, &sg);
  return sg * std::exp(lognorm - u / 2 + (0.5 + q) / 2 * std::log(u) + ll);
}

double p1_wf_horicyclic(const P1Params& p, int n1, int n2, double x, double y) {
  return p1_psi1(p, n1, x) * p1_psi2(p, n2, n1 + n2, y);
}

double p1_l1_eigenvalue(const P1Params& p, int m) {
  const double mu = p1_mu(p, m);
  return mu * mu;
}

double p1_n2_eigenvalue(const P1Params& p, int n1) { return -2 * p.c * (2 * n1 + p.d + 1); }

double p1_l2_eigenvalue(const P1Params& p, int n1) { return p1_n2_eigenvalue(p, n1) + 2 * p.gamma * p.gamma; }

double p1_l2_eigenvalue_printed(const P1Params& p, int n1) {
  return -(2 * p.c * (2 * n1 + p.d + 1) + 2 * p.gamma * p.gamma);
}

namespace {

// coefficients (A, B0) of A*theta + B0 in the polynomial layout
std::pair<double, double> ep_linear(const P1Params& p, ZeroForm f) {
  if (f == ZeroForm::derived) return {p.s, -p.s + p.d + 1};
  return {p.s / 2, p.s + p.d + 1};
}

std::pair<double, double> hp_linear(const P1Params& p, ZeroForm f) {
  if (f == ZeroForm::derived) return {p.s, p.s - p.d - 1};
  return {p.s / 2, p.s - p.d - 1};
}

}  // namespace

StieltjesSystem p1_ep_system(const P1Params& p, int N, ZeroForm form) {
  const auto [A, B0] = ep_linear(p, form);
  StieltjesSystem sys;
  sys.poles = {0.0, 1.0};
  sys.weights = {-(2.0 * N + B0), A + B0};
  sys.linear = -2 * p.beta / std::sqrt(2.0);
  return sys;
}

StieltjesSystem p1_hp_system(const P1Params& p, int N, ZeroForm form) {
  const auto [A, B0] = hp_linear(p, form);
  StieltjesSystem sys;
  sys.poles = {0.0, -1.0};
  sys.weights = {-2.0 * N + B0, A - B0};
  sys.linear = -2 * p.beta / std::sqrt(2.0);
  return sys;
}

double p1_ep_equation(const P1Params& p, const std::vector<cplx>& roots, int i, ZeroForm form) {
  const auto [A, B0] = ep_linear(p, form);
  const int N = int(roots.size());
  const double t = roots[i].real();
  double sum = 0;
  for (int k = 0; k < N; ++k)
    if (k != i) sum += 1.0 / (roots[k].real() - t);
  return 2 * t * (1 - t) * (sum + p.beta / std::sqrt(2.0)) + 2 * (1 - t) * N + A * t + B0;
}

double p1_hp_equation(const P1Params& p, const std::vector<cplx>& roots, int i, ZeroForm form) {
  const auto [A, B0] = hp_linear(p, form);
  const int N = int(roots.size());
  const double t = roots[i].real();
  double sum = 0;
  for (int k = 0; k < N; ++k)
    if (k != i) sum += 1.0 / (t - roots[k].real());
  return 2 * t * (1 + t) * (sum - p.beta / std::sqrt(2.0)) - 2 * (1 + t) * N + A * t + B0;
}

std::vector<Zone> p1_ep_zones() { return {{0.0, 1.0}, {1.0, kInf}}; }
std::vector<Zone> p1_hp_zones() { return {{0.0, kInf}, {-1.0, 0.0}}; }

namespace {

template <class Eq>
std::vector<BetheRoots> collect(const StieltjesSystem& sys, int N, const std::vector<Zone>& zones, Eq eq,
                                const RootOptions& opt) {
  RootSearch rs;
  rs.zones = zones;
  rs.seed = opt.seed;
  const auto sols = solve_stieltjes(sys, N, rs);
  std::vector<BetheRoots> out;
  double best = kInf;
  for (const auto& r : sols) {
    bool real = true;
    for (const cplx& t : r)
      if (std::abs(t.imag()) > 1e-9 * std::max(1.0, std::abs(t))) real = false;
    if (!real) continue;
    std::vector<cplx> rr;
    for (const cplx& t : r) rr.push_back(t.real());
    BetheRoots b;
    b.roots = rr;
    for (int i = 0; i < N; ++i) b.residual = std::max(b.residual, std::abs(eq(rr, i)));
    best = std::min(best, b.residual);
    if (b.residual > opt.accept) continue;
    b.zone_counts = count_in_zones(rr, zones, &b.in_zones);
    out.push_back(b);
  }
  if (out.empty())
    throw Error(ErrorKind::solver_failure, "no root configuration reached residual " + detail::sci(opt.accept) +
                                               " (best " + detail::sci(best) + ")");
  return out;
}

}  // namespace

std::vector<BetheRoots> p1_ep_roots(const P1Params& p, int N, ZeroForm form, const RootOptions& opt) {
  p1_q(p, N);
  return collect(p1_ep_system(p, N, form), N, p1_ep_zones(),
                 [&](const std::vector<cplx>& r, int i) { return p1_ep_equation(p, r, i, form); }, opt);
}

std::vector<BetheRoots> p1_hp_roots(const P1Params& p, int N, ZeroForm form, const RootOptions& opt) {
  p1_q(p, N);
  return collect(p1_hp_system(p, N, form), N, p1_hp_zones(),
                 [&](const std::vector<cplx>& r, int i) { return p1_hp_equation(p, r, i, form); }, opt);
}

double p1_ep_lambda(const P1Params& p, const std::vector<cplx>& roots) {
  double sum = 0;
  for (const cplx& t : roots) sum += t.real();
  const double k = 8 * p.beta / std::sqrt(2.0);
  return k * sum - (p.s - 1) * (p.s - 1) + k / 2 * (1 + p.d) - 2 * p.gamma * p.gamma;
}

double p1_hp_tau(const P1Params& p, const std::vector<cplx>& roots) {
  double sum = 0;
  for (const cplx& t : roots) sum += t.real();
  const double k = 8 * p.beta / std::sqrt(2.0);
  return k * sum - (p.s - 1) * (p.s - 1) - k / 2 * (1 + p.d) + 2 * p.gamma * p.gamma;
}

double area_element(Chart c, double u1, double u2) {
  switch (c) {
    case Chart::equidistant: return std::cosh(u1);
    case Chart::horicyclic: return 1.0 / (u2 * u2);
    case Chart::elliptic_parabolic: {
      const double ca = std::cosh(u1), ct = std::cos(u2);
      return (ca * ca - ct * ct) / (ca * ca * ct * ct);
    }
    case Chart::hyperbolic_parabolic: {
      const double sb = std::sinh(u1), st = std::sin(u2);
      return (sb * sb + st * st) / (sb * sb * st * st);
    }
    case Chart::semi_hyperbolic: break;
  }
  throw Error(ErrorKind::invalid_argument, "no closed-form area element for this chart");
}

namespace {

// Raw product form from the chart trigonometric values:
// EP: h1 = sinh a, g1 = cosh a, h2 = |sin th|, g2 = cos th
// HP: h1 = cosh b, g1 = sinh b, h2 = cos th, g2 = sin th
double raw_log(const ParabolicState& st, double h1, double g1, double h2, double g2, int* sign) {
  const P1Params& p = st.params;
  const double cp = p.beta / std::sqrt(2.0);
  const double ex = p.s - p.d - 2 * st.N - 1.5;
  double l = (0.5 + p.d) * std::log(h1 * h2) + ex * std::log(g1 * g2);
  int sg = 1;
  const bool ep = st.chart == Chart::elliptic_parabolic;
  const double X = g1 * g1;
  const double Y = g2 * g2;
  l -= ep ? cp * (X + Y) : cp * (X - Y);
  for (const cplx& r : st.roots.roots) {
    const double t = r.real();
    const double f1 = X - t;
    const double f2 = ep ? Y - t : Y + t;
    if (f1 < 0) sg = -sg;
    if (f2 < 0) sg = -sg;
    l += std::log(std::abs(f1)) + std::log(std::abs(f2));
  }
  *sign = sg;
  return l;
}

double normalize(ParabolicState& st, int level) {
  const bool ep = st.chart == Chart::elliptic_parabolic;
  // reference log value to keep the integrand in range
  double ref = -kInf;
  for (int i = 1; i <= 24; ++i)
    for (int j = 1; j <= 24; ++j) {
      const double u = 4.0 * i / 24, ph = kHalfPi * j / 25;
      int sg;
      const double l = ep ? raw_log(st, std::sinh(u), std::cosh(u), std::cos(ph), std::sin(ph), &sg)
                          : raw_log(st, std::cosh(u), std::sinh(u), std::cos(ph), std::sin(ph), &sg);
      if (std::isfinite(l)) ref = std::max(ref, l);
    }
  // phi = pi/2 - theta (EP) or theta (HP); the singular end of g2 sits at phi = 0
  auto inner = [&](double u) {
    const double h1 = ep ? std::sinh(u) : std::cosh(u);
    const double g1 = ep ? std::cosh(u) : std::sinh(u);
    QuadratureSpec s{Rule::tanh_sinh, level, 0.0, kHalfPi, Transform::none};
    auto f = [&](double ph) {
      const double g2 = std::sin(ph), h2 = std::cos(ph);
      int sg;
      const double l = raw_log(st, h1, g1, h2, g2, &sg);
      const double vol = ep ? (g1 * g1 - g2 * g2) / (g1 * g1 * g2 * g2) : (g1 * g1 + g2 * g2) / (g1 * g1 * g2 * g2);
      const double v = std::exp(2 * (l - ref)) * vol;
      return std::isfinite(v) ? v : 0.0;
    };
    return integrate(f, s).value;
  };
  QuadratureSpec so{Rule::tanh_sinh, level, 0.0, kInf, Transform::exp_map};
  const double I = integrate(inner, so).value;
  if (!(I > 0) || !std::isfinite(I)) throw Error(ErrorKind::quadrature_failure, "parabolic normalization failed");
  return ref + 0.5 * std::log(I);
}

ParabolicState make_state(const P1Params& p, Chart chart, int N, int a, int b, const RootOptions& opt, int level) {
  if (a < 0 || b < 0 || a + b != N)
    throw Error(ErrorKind::out_of_window, "zone counts must be non-negative and sum to N");
  const bool ep = chart == Chart::elliptic_parabolic;
  const RootOptions any{kInf, opt.seed};
  const auto all = ep ? p1_ep_roots(p, N, ZeroForm::derived, any) : p1_hp_roots(p, N, ZeroForm::derived, any);
  ParabolicState st;
  st.params = p;
  st.chart = chart;
  st.N = N;
  st.first = a;
  st.second = b;
  bool found = false;
  for (const auto& r : all)
    if (r.in_zones && r.zone_counts[0] == a && r.zone_counts[1] == b) {
      st.roots = r;
      found = true;
      break;
    }
  if (!found)
    throw Error(ErrorKind::solver_failure, "no root configuration with the requested zone counts");
  if (st.roots.residual > opt.accept)
    throw Error(ErrorKind::solver_failure, "configuration residual " + detail::sci(st.roots.residual) +
                                               " above the accepted " + detail::sci(opt.accept));
  st.separation = ep ? p1_ep_lambda(p, st.roots.roots) : p1_hp_tau(p, st.roots.roots);
  st.log_norm = normalize(st, level);
  return st;
}

}  // namespace

ParabolicState p1_ep_state(const P1Params& p, int N, int pc, int qc, const RootOptions& opt, int quad_level) {
  return make_state(p, Chart::elliptic_parabolic, N, pc, qc, opt, quad_level);
}

ParabolicState p1_hp_state(const P1Params& p, int N, int lc, int kc, const RootOptions& opt, int quad_level) {
  return make_state(p, Chart::hyperbolic_parabolic, N, lc, kc, opt, quad_level);
}

double p1_parabolic_log_abs(const ParabolicState& st, double u1, double u2, int* sign) {
  if (st.chart == Chart::elliptic_parabolic)
    return raw_log(st, std::sinh(u1), std::cosh(u1), std::abs(std::sin(u2)), std::cos(u2), sign);
  return raw_log(st, std::cosh(u1), std::sinh(u1), std::cos(u2), std::sin(u2), sign);
}

double p1_wf_elliptic_parabolic(const ParabolicState& st, double a, double th) {
  if (st.chart != Chart::elliptic_parabolic) throw Error(ErrorKind::invalid_argument, "not an elliptic-parabolic state");
  if (!in_chart_domain(ChartPoint{Chart::elliptic_parabolic, a, th, std::nullopt, false}))
    throw Error(ErrorKind::domain, "point outside the elliptic-parabolic chart");
  int sg;
  const double l = p1_parabolic_log_abs(st, a, th, &sg);
  return sg * std::exp(l - st.log_norm);
}

double p1_wf_hyperbolic_parabolic(const ParabolicState& st, double b, double th) {
  if (st.chart != Chart::hyperbolic_parabolic) throw Error(ErrorKind::invalid_argument, "not a hyperbolic-parabolic state");
  if (!in_chart_domain(ChartPoint{Chart::hyperbolic_parabolic, b, th, std::nullopt, false}))
    throw Error(ErrorKind::domain, "point outside the hyperbolic-parabolic chart");
  int sg;
  const double l = p1_parabolic_log_abs(st, b, th, &sg);
  return sg * std::exp(l - st.log_norm);
}

}  // namespace hypersint
