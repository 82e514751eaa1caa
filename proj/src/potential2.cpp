#include "hypersint/potential2.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hypersint/error.hpp"
#include "hypersint/specfun.hpp"
#include "polylog.hpp"

namespace hypersint {

namespace {

constexpr double kInfLine = std::numeric_limits<double>::infinity();

void require_positive(double v, const char* name) {
  if (!(v > 0) || !std::isfinite(v))
    throw Error(ErrorKind::invalid_argument, std::string(name) + " must be a positive finite number");
}

}  // namespace

P2Params P2Params::make(double alpha, double beta, double gamma) {
  require_positive(alpha, "alpha");
  require_positive(beta, "beta");
  require_positive(gamma, "gamma");
  P2Params p;
  p.alpha = alpha;
  p.beta = beta;
  p.gamma = gamma;
  p.B = 2 * beta * beta - 2 * alpha * alpha + 1;
  const double g4 = std::pow(gamma, 4);
  const double r = std::hypot(p.B, gamma * gamma);
  p.M = std::sqrt(p.B + r) / std::sqrt(2.0);
  // avoid cancellation in r - B or r + B
  const double rp = p.B >= 0 ? r + p.B : g4 / (r - p.B);
  const double rm = p.B > 0 ? g4 / (r + p.B) : r - p.B;
  p.M = std::sqrt(rp / 2);
  p.a = cplx(-std::sqrt(rp), std::sqrt(rm)) / std::pow(2.0, 1.5);
  p.k1 = p.a;
  p.k2 = std::conj(p.a);
  p.d = std::sqrt(2 * alpha * alpha + 0.25);
  p.k3 = p.d;
  const double top = p.M / 2 - p.d / 2 - 1;
  p.nmax = top < 0 ? -1 : int(std::floor(top));
  return p;
}

double v2_ambient(const P2Params& p, const AmbientPoint& q) {
  if (q.w2 == 0) throw Error(ErrorKind::singular_configuration, "V2 needs w2 != 0");
  const double r = q.w0 * q.w0 + q.w1 * q.w1;
  const double a2 = p.alpha * p.alpha, b2 = p.beta * p.beta;
  return a2 / (q.w2 * q.w2) + p.gamma * p.gamma * q.w0 * q.w1 / (r * r) + (a2 - b2) * (q.w0 * q.w0 - q.w1 * q.w1) / (r * r);
}

namespace {

double v2_chart(const P2Params& p, double t1, double t2, double sign) {
  const double sh = std::sinh(t1), ch = std::cosh(t1);
  const double c2 = std::cosh(t2), s2 = std::sinh(t2);
  const double r = c2 * c2 + s2 * s2;
  const double a2 = p.alpha * p.alpha, b2 = p.beta * p.beta;
  return sign * a2 / (sh * sh) + (a2 - b2 + p.gamma * p.gamma * c2 * s2) / (ch * ch * r * r);
}

}  // namespace

double v2_equidistant(const P2Params& p, double t1, double t2) { return v2_chart(p, t1, t2, 1.0); }
double v2_equidistant_printed(const P2Params& p, double t1, double t2) { return v2_chart(p, t1, t2, -1.0); }

int p2_m_max(const P2Params& p) {
  const double t = (p.M - 1) / 2;
  return t < 0 ? -1 : int(std::floor(t));
}

double p2_mu(const P2Params& p, int m) {
  if (m < 0 || m > p2_m_max(p))
    throw Error(ErrorKind::out_of_window, "m = " + std::to_string(m) + " outside 0.." + std::to_string(p2_m_max(p)));
  return p.M - 2 * m - 1;
}

namespace {

double level_q(const P2Params& p, int N) {
  if (N < 0 || N > p.nmax)
    throw Error(ErrorKind::no_bound_state,
                "level N = " + std::to_string(N) + " outside 0.." + std::to_string(p.nmax));
  const double q = p.M - p.d - 2 * N - 2;
  if (q <= 1e-12)
    throw Error(ErrorKind::threshold_state, "level N = " + std::to_string(N) + " sits at E = 1/8");
  return q;
}

}  // namespace

double p2_energy(const P2Params& p, int N) {
  const double q = level_q(p, N);
  return -0.5 * q * q + 0.125;
}

double p2_energy_semihyperbolic(const P2Params& p, int N) {
  level_q(p, N);
  const cplx t = 2.0 * N + 2.0 + p.k1 + p.k2 + p.k3;
  return (-0.5 * t * t).real() + 0.125;
}

std::vector<std::array<int, 2>> p2_level_states(const P2Params& p, int N) {
  level_q(p, N);
  std::vector<std::array<int, 2>> out;
  for (int m = 0; m <= N && m <= p2_m_max(p); ++m) {
    const int n = N - m;
    if (p2_mu(p, m) - p.d - 2 * n - 1 > 0) out.push_back({n, m});
  }
  return out;
}

double p2_l1_eigenvalue(const P2Params& p, int m) {
  const double mu = p2_mu(p, m);
  return mu * mu;
}

cplx p2_s(const P2Params& p, int m, double t2) {
  const double mu = p2_mu(p, m);
  const double x = std::sinh(2 * t2);
  if (!std::isfinite(x) || std::abs(x) > 1e150) return 0.0;
  const cplx a = p.a, ac = std::conj(p.a);
  const cplx lognorm = 0.5 * (std::log(mu) + log_gamma(m + 1.0) + log_gamma(-double(m) - a) + log_gamma(-double(m) - ac) -
                              std::log(std::numbers::pi) - (a + ac + 1.0) * std::log(2.0) -
                              log_gamma(-double(m) - a - ac));
  const cplx ix(0.0, x);
  const cplx lp = std::log(jacobi(m, a, ac, -ix));
  const cplx l = lognorm + (a / 2.0 + 0.25) * std::log(1.0 + ix) + (ac / 2.0 + 0.25) * std::log(1.0 - ix) + lp;
  return std::pow(cplx(0, 1), m) * std::exp(l);
}

double p2_z(const P2Params& p, int n, double mu, double t1) {
  if (n < 0 || mu - p.d - 2 * n - 1 <= 0)
    throw Error(ErrorKind::out_of_window, "Poschl-Teller index n outside its window");
  return detail::pt_factor(p.d, n, mu, t1);
}

cplx p2_wf_equidistant(const P2Params& p, int n, int m, double t1, double t2) {
  level_q(p, n + m);
  const cplx v = std::exp(-0.5 * detail::log_cosh(t1)) * p2_z(p, n, p2_mu(p, m), t1) * p2_s(p, m, t2);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw Error(ErrorKind::nonfinite, "non-finite equidistant V2 wavefunction");
  return v;
}

std::array<cplx, 3> p2_sh_poles(const SemiHyperbolicParams& cp) {
  const cplx e1(cp.a, cp.b);
  return {e1, std::conj(e1), cplx(cp.e3)};
}

StieltjesSystem p2_sh_system(const P2Params& p, const SemiHyperbolicParams& cp) {
  const auto e = p2_sh_poles(cp);
  StieltjesSystem sys;
  sys.poles = {e[0], e[1], e[2]};
  sys.weights = {p.k1 + 1.0, p.k2 + 1.0, cplx(p.k3 + 1.0)};
  return sys;
}

std::vector<cplx> p2_sh_equation(const P2Params& p, const SemiHyperbolicParams& cp, const std::vector<cplx>& roots) {
  return stieltjes_residual(p2_sh_system(p, cp), roots);
}

std::vector<BetheRoots> p2_sh_roots(const P2Params& p, int N, const SemiHyperbolicParams& cp, double accept,
                                    std::uint64_t seed) {
  level_q(p, N);
  RootSearch rs;
  rs.complex_seeds = true;
  // seeds on both sides of the real pole
  rs.zones = {{-kInfLine, cp.e3}, {cp.e3, kInfLine}};
  rs.seed = seed;
  rs.random_starts = 96 + 32 * N;
  const auto sys = p2_sh_system(p, cp);
  std::vector<BetheRoots> out;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& r : solve_stieltjes(sys, N, rs)) {
    BetheRoots b;
    b.roots = r;
    const auto f = stieltjes_residual(sys, r);
    for (int i = 0; i < N; ++i) b.residual = std::max(b.residual, std::abs(f[i]) * std::max(1.0, std::abs(r[i])));
    best = std::min(best, b.residual);
    if (b.residual > accept) continue;
    b.in_zones = false;
    out.push_back(b);
  }
  if (out.empty())
    throw Error(ErrorKind::solver_failure, "no root configuration reached residual " + detail::sci(accept) +
                                               " (best " + detail::sci(best) + ")");
  return out;
}

cplx p2_sh_lambda(const P2Params& p, const SemiHyperbolicParams& cp, const std::vector<cplx>& roots) {
  const auto e = p2_sh_poles(cp);
  const cplx k[3] = {p.k1, p.k2, cplx(p.k3)};
  cplx P = double(roots.size()), U2 = 0.0, sig = 0.0;
  for (int l = 0; l < 3; ++l) {
    const cplx pl = (k[l] + 0.5) / 2.0;
    P += pl;
    U2 += pl * e[l];
    sig += e[l];
  }
  for (const cplx& t : roots) U2 += t;
  return 4.0 * ((2.0 * P - 0.5) * U2 - sig * P * P);
}

cplx p2_sh_lambda_printed(const P2Params& p, const SemiHyperbolicParams& cp, const std::vector<cplx>& roots) {
  const auto e = p2_sh_poles(cp);
  const cplx e2 = e[1], e2c = e[0], e3 = e[2];
  const cplx k1 = p.k1, k2 = p.k2, k3 = p.k3;
  cplx s1 = 0.0, s2 = 0.0, s3 = 0.0;
  for (const cplx& t : roots) {
    s1 += 1.0 / (t - e2c);
    s2 += 1.0 / (t - e2);
    s3 += 1.0 / (t - e3);
  }
  return -2.0 * (k1 * (e2 + e3) + k2 * (e2c + e3) + k3 * (e2 + e2c)) -
         2.0 * (e3 * k1 * k2 + e2 * k1 * k3 + e2c * k2 * k3) - 1.5 * (e2c + e2 + e3) -
         4.0 * e2 * e3 * (k1 + 1.0) * s1 - e2c * e3 * (k2 + 1.0) * s2 - 4.0 * e2 * e2c * (k3 + 1.0) * s3;
}

cplx p2_sh_factor(const SemiHyperbolicParams& cp, const AmbientPoint& q, cplx theta) {
  const auto s = semi_hyperbolic_squares(q);
  const auto e = p2_sh_poles(cp);
  cplx v = 0.0;
  for (int l = 0; l < 3; ++l) v += s[l] / (theta - e[l]);
  return v;
}

cplx p2_sh_factor_rational(const SemiHyperbolicParams& cp, cplx mu, cplx nu, cplx theta) {
  const auto e = p2_sh_poles(cp);
  return (theta - mu) * (theta - nu) / ((theta - e[0]) * (theta - e[1]) * (theta - e[2]));
}

cplx p2_sh_raw(const SemiHyperbolicState& st, const AmbientPoint& q) {
  if (q.w2 == 0) throw Error(ErrorKind::singular_configuration, "semi-hyperbolic state needs w2 != 0");
  const P2Params& p = st.params;
  const cplx zp(q.w0 / std::sqrt(2.0), q.w1 / std::sqrt(2.0));
  cplx l = (p.k1 + 0.5) * std::log(zp) + (p.k2 + 0.5) * std::log(std::conj(zp)) +
           (p.k3 + 0.5) * std::log(cplx(0.0, std::abs(q.w2)));
  cplx v = std::exp(l);
  for (const cplx& t : st.roots.roots) v *= p2_sh_factor(st.chart_params, q, t);
  return v;
}

cplx p2_wf_semihyperbolic(const SemiHyperbolicState& st, const AmbientPoint& q) { return p2_sh_raw(st, q) / st.phase; }

SemiHyperbolicState p2_sh_state(const P2Params& p, int N, int index, const SemiHyperbolicParams& cp,
                                std::uint64_t seed, double accept) {
  const auto all = p2_sh_roots(p, N, cp, accept, seed);
  if (index < 0 || index >= int(all.size()))
    throw Error(ErrorKind::out_of_window, "root configuration index outside 0.." + std::to_string(all.size() - 1));
  SemiHyperbolicState st;
  st.params = p;
  st.chart_params = cp;
  st.N = N;
  st.roots = all[index];
  st.lambda = p2_sh_lambda(p, cp, st.roots.roots);
  // reference points on the equidistant grid; take the first with a usable value
  for (double t1 : {0.6, 0.9, 0.4, 1.3})
    for (double t2 : {0.2, -0.3, 0.7}) {
      const cplx v = p2_sh_raw(st, chart_to_ambient(ChartPoint{Chart::equidistant, t1, t2, std::nullopt, false}));
      if (std::abs(v) > 1e-200 && std::isfinite(std::abs(v))) {
        st.phase = v / std::abs(v);
        return st;
      }
    }
  throw Error(ErrorKind::nonfinite, "semi-hyperbolic state vanishes at every reference point");
}

}  // namespace hypersint
