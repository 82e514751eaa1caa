#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hypersint/error.hpp"
#include "hypersint/potential2.hpp"
#include "hypersint/quadrature.hpp"

using namespace hypersint;
using doctest::Approx;

namespace {

const P2Params fx = P2Params::make(0.1, 3.0, 1.0);
const P2Params deep = P2Params::make(0.1, 6.0, 1.0);
const SemiHyperbolicParams cp0{0.0, 1.0, 0.0};
const SemiHyperbolicParams cp1{0.3, 1.2, 0.1};

AmbientPoint equi(double t1, double t2) {
  return chart_to_ambient(ChartPoint{Chart::equidistant, t1, t2, std::nullopt, false});
}

std::vector<AmbientPoint> interior(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<AmbientPoint> out;
  for (int i = 0; i < n; ++i) out.push_back(equi(0.25 + 1.1 * u(rng), -0.8 + 1.6 * u(rng)));
  return out;
}

double residual(const P2Params& p, const std::function<cplx(const AmbientPoint&)>& psi, double E,
                const std::vector<AmbientPoint>& pts) {
  const OperatorExpr lb = laplace_beltrami();
  DiffOptions opt{1e-3, 2};
  double worst = 0;
  for (const auto& q : pts) {
    const cplx kin = -0.5 * apply_operator(lb, psi, q, opt);
    const cplx pot = v2_ambient(p, q) * psi(q);
    const double scale = std::abs(kin) + std::abs(pot) + std::abs(E * psi(q));
    worst = std::max(worst, std::abs(kin + pot - E * psi(q)) / scale);
  }
  return worst;
}

}  // namespace

TEST_CASE("branch constants") {
  CHECK(fx.M == Approx(4.3581145730075948).epsilon(1e-14));
  CHECK(fx.a.real() == Approx(-2.1790572865037974).epsilon(1e-14));
  CHECK(fx.a.imag() == Approx(0.0573642559900557).epsilon(1e-13));
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.05, 5);
  for (int i = 0; i < 50; ++i) {
    const P2Params p = P2Params::make(u(rng), u(rng), u(rng));
    cplx oracle = std::sqrt(cplx(p.B, -p.gamma * p.gamma) / 4.0);
    if (oracle.real() > 0) oracle = -oracle;
    CHECK(std::abs(p.a - oracle) < 1e-13 * std::max(1.0, std::abs(oracle)));
    CHECK(std::abs(p.a * p.a - cplx(p.B, -p.gamma * p.gamma) / 4.0) < 1e-13 * std::max(1.0, std::abs(p.a * p.a)));
    CHECK(std::abs(2 * p.k1.real() + p.M) < 1e-12 * p.M);
    CHECK(p.k2 == std::conj(p.k1));
    for (int N = 0; N <= p.nmax; ++N)
      CHECK(std::abs(p2_energy(p, N) - p2_energy_semihyperbolic(p, N)) < 1e-12 * std::max(1.0, std::abs(p2_energy(p, N))));
  }
}

TEST_CASE("spectrum and window") {
  CHECK(fx.nmax == 0);
  CHECK(p2_energy(fx, 0) == Approx(-1.5650398945600728).epsilon(1e-13));
  CHECK_THROWS_AS(p2_energy(fx, 1), Error);
  CHECK(p2_mu(fx, 0) == Approx(fx.M - 1));
  CHECK(p2_m_max(fx) == 1);
  CHECK_THROWS_AS(p2_mu(fx, 2), Error);
  for (int m = 0; m <= p2_m_max(deep); ++m)
    CHECK(p2_mu(deep, m) + 2 * m + 1 - deep.M == 0.0);
  for (int N = 0; N <= deep.nmax; ++N) CHECK(p2_level_states(deep, N).size() == std::size_t(N + 1));
}

TEST_CASE("potential chart form") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int i = 0; i < 100; ++i) {
    double t1 = u(rng), t2 = u(rng);
    if (std::abs(t1) < 0.05) t1 = 0.3;
    const double v = v2_ambient(fx, equi(t1, t2));
    CHECK(v2_equidistant(fx, t1, t2) == Approx(v).epsilon(1e-12));
  }
  CHECK(std::abs(v2_equidistant_printed(fx, 0.4, 0.3) - v2_ambient(fx, equi(0.4, 0.3))) > 1e-3);
  CHECK_THROWS_AS(v2_ambient(fx, {1, 0, 0}), Error);
}

TEST_CASE("equidistant factors") {
  for (const P2Params* p : {&fx, &deep})
    for (int m = 0; m <= p2_m_max(*p); ++m) {
      double worst_im = 0;
      auto f = [&](double t) {
        const cplx s = p2_s(*p, m, t);
        worst_im = std::max(worst_im, std::abs(s.imag()) / std::max(1e-300, std::abs(s)));
        return std::norm(s);
      };
      const double I = integrate(f, {Rule::tanh_sinh, 8, -kInf, kInf, Transform::exp_map}).value;
      CHECK(I == Approx(1.0).epsilon(1e-8));
      CHECK(worst_im < 1e-10);
    }
  // m = 0 is the positive conjugate-pair product
  CHECK(p2_s(fx, 0, 0.37).real() > 0);
}

TEST_CASE("fixture state is normalized") {
  auto inner = [&](double t1) {
    return integrate(
               [&](double t2) { return std::norm(p2_wf_equidistant(fx, 0, 0, t1, t2)) * std::cosh(t1); },
               {Rule::tanh_sinh, 7, -kInf, kInf, Transform::exp_map})
        .value;
  };
  const double I = integrate(inner, {Rule::tanh_sinh, 7, 0.0, kInf, Transform::exp_map}).value;
  CHECK(std::abs(I - 1) < 1e-7);
}

TEST_CASE("equidistant states solve the Schroedinger equation") {
  const auto pts = interior(12, 7);
  for (int N = 0; N <= 2; ++N)
    for (auto [n, m] : p2_level_states(deep, N)) {
      auto psi = [&, n = n, m = m](const AmbientPoint& q) {
        const ChartPoint c = ambient_to_chart(q, Chart::equidistant);
        return p2_wf_equidistant(deep, n, m, c.u1, c.u2);
      };
      CHECK(residual(deep, psi, p2_energy(deep, N), pts) < 1e-6);
    }
}

TEST_CASE("semi-hyperbolic roots") {
  CHECK(p2_sh_roots(fx, 0, cp0).size() == 1);
  CHECK(p2_sh_roots(fx, 0, cp0)[0].roots.empty());
  const auto e = p2_sh_poles(cp1);
  // N = 1: roots of the quadratic from clearing denominators
  const cplx w1 = deep.k1 + 1.0, w2 = deep.k2 + 1.0, w3 = deep.k3 + 1.0;
  const cplx A = w1 + w2 + w3;
  const cplx Bq = -(w1 * (e[1] + e[2]) + w2 * (e[0] + e[2]) + w3 * (e[0] + e[1]));
  const cplx C = w1 * e[1] * e[2] + w2 * e[0] * e[2] + w3 * e[0] * e[1];
  const cplx disc = std::sqrt(Bq * Bq - 4.0 * A * C);
  const cplx r1 = (-Bq + disc) / (2.0 * A), r2 = (-Bq - disc) / (2.0 * A);
  const auto one = p2_sh_roots(deep, 1, cp1);
  REQUIRE(one.size() == 2);
  for (const auto& b : one) {
    const cplx t = b.roots[0];
    CHECK(std::min(std::abs(t - r1), std::abs(t - r2)) < 1e-12);
  }
  for (int N = 0; N <= deep.nmax; ++N) {
    const auto all = p2_sh_roots(deep, N, cp1);
    CHECK(all.size() == std::size_t(N + 1));
    for (const auto& b : all) {
      CHECK(b.residual <= 1e-10);
      const cplx lam = p2_sh_lambda(deep, cp1, b.roots);
      auto rev = b.roots;
      std::reverse(rev.begin(), rev.end());
      CHECK(std::abs(p2_sh_lambda(deep, cp1, rev) - lam) < 1e-10 * std::max(1.0, std::abs(lam)));
      CHECK(std::abs(lam.imag()) <= 1e-9 * std::max(1.0, std::abs(lam)));
    }
  }
}

TEST_CASE("factor identity") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int i = 0; i < 50; ++i) {
    double t1 = u(rng);
    if (std::abs(t1) < 0.05) t1 = 0.4;
    const AmbientPoint q = equi(t1, u(rng));
    const ChartPoint c = ambient_to_chart(q, Chart::semi_hyperbolic, cp1);
    const cplx th(u(rng), u(rng));
    const cplx lhs = p2_sh_factor(cp1, q, th);
    const cplx rhs = p2_sh_factor_rational(cp1, c.u1, c.u2, th);
    CHECK(std::abs(lhs - rhs) < 1e-10 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("semi-hyperbolic states") {
  const auto pts = interior(12, 9);
  for (int N = 0; N <= 2; ++N)
    for (int k = 0; k <= N; ++k) {
      const SemiHyperbolicState st = p2_sh_state(deep, N, k, cp1);
      auto psi = [&](const AmbientPoint& q) { return p2_wf_semihyperbolic(st, q); };
      CHECK(residual(deep, psi, p2_energy(deep, N), pts) < 1e-6);
      double worst = 0;
      for (const auto& q : pts) {
        const cplx v = psi(q);
        worst = std::max(worst, std::abs(v.imag()) / std::abs(v));
      }
      CHECK(worst < 1e-8);
    }
  // nodeless ground state
  const SemiHyperbolicState g = p2_sh_state(deep, 0, 0, cp0);
  for (const auto& q : interior(200, 3)) CHECK(p2_wf_semihyperbolic(g, q).real() > 0);
}
