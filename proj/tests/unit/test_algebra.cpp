#include <cmath>
#include <random>

#include "doctest.h"
#include "hypersint/algebra.hpp"
#include "hypersint/error.hpp"

using namespace hypersint;
using doctest::Approx;

namespace {

const P1Params fx = P1Params::make(1.0, 1.0 / std::sqrt(2.0), 2.0 * std::sqrt(2.0));
const P1Params other = P1Params::make(0.6, 0.45, 2.7);

std::vector<AmbientPoint> sample(Chart c, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<AmbientPoint> out;
  for (int i = 0; i < n; ++i) {
    ChartPoint p{c, 0, 0, std::nullopt, false};
    if (c == Chart::equidistant) p.u1 = 0.25 + 1.1 * u(rng), p.u2 = -0.8 + 1.4 * u(rng);
    if (c == Chart::horicyclic) p.u1 = 0.2 + 1.4 * u(rng), p.u2 = 0.25 + 1.2 * u(rng);
    out.push_back(chart_to_ambient(p));
  }
  return out;
}

ScalarField equi_state(const P1Params& p, int n, int m) {
  return [&p, n, m](const AmbientPoint& q) {
    const ChartPoint c = ambient_to_chart(q, Chart::equidistant);
    return cplx(p1_wf_equidistant(p, n, m, c.u1, c.u2));
  };
}

ScalarField hori_state(const P1Params& p, int n1, int n2) {
  return [&p, n1, n2](const AmbientPoint& q) {
    const ChartPoint c = ambient_to_chart(q, Chart::horicyclic);
    return cplx(p1_wf_horicyclic(p, n1, n2, c.u1, c.u2));
  };
}

}  // namespace

TEST_CASE("operator structure") {
  const OperatorExpr l1 = build_operator(OpId::L1, fx);
  REQUIRE(l1.terms.size() == 2);
  CHECK(l1.terms[0].word == std::vector<Generator>{Generator::K3, Generator::K3});
  const OperatorExpr l2 = build_operator(OpId::L2, fx), n2 = build_operator(OpId::N2, fx);
  CHECK(l2.constant_term - n2.constant_term == cplx(2 * fx.gamma * fx.gamma));
  CHECK_THROWS_AS(apply_operator(l1, [](const AmbientPoint&) { return cplx(1); }, AmbientPoint{1, 0, 0}), Error);
}

TEST_CASE("free Laplace-Beltrami on w0") {
  const OperatorExpr lb = laplace_beltrami();
  ScalarField f = [](const AmbientPoint& q) { return cplx(q.w0); };
  for (const auto& q : sample(Chart::equidistant, 10, 1))
    CHECK(apply_operator(lb, f, q, {1e-3, 2}).real() == Approx(2 * q.w0).epsilon(1e-9));
}

TEST_CASE("eigenvalue residuals") {
  const auto pe = sample(Chart::equidistant, 80, 2);
  const auto ph = sample(Chart::horicyclic, 80, 3);
  const DiffOptions opt{1e-2, 2};
  const OperatorExpr l1 = build_operator(OpId::L1, fx), l2 = build_operator(OpId::L2, fx);
  const OperatorExpr h = build_operator(OpId::H, fx);
  for (int N = 0; N <= 2; ++N)
    for (int m = 0; m <= N; ++m) {
      const auto r = eigen_residual(l1, equi_state(fx, N - m, m), p1_l1_eigenvalue(fx, m), pe, opt);
      CHECK(r.residual < 1e-6);
      CHECK(r.used >= 50);
      CHECK(eigen_residual(h, equi_state(fx, N - m, m), p1_energy(fx, N), pe, opt).residual < 1e-6);
      const int n1 = m;
      const auto r2 = eigen_residual(l2, hori_state(fx, n1, N - n1), p1_l2_eigenvalue(fx, n1), ph, opt);
      CHECK(r2.residual < 1e-6);
      CHECK(r2.used >= 50);
      // the printed eigenvalue is off
      CHECK(eigen_residual(l2, hori_state(fx, n1, N - n1), p1_l2_eigenvalue_printed(fx, n1), ph, opt).residual > 0.1);
    }
}

TEST_CASE("parabolic separation constants are L3 and L4 eigenvalues") {
  const auto pe = sample(Chart::equidistant, 20, 4);
  const DiffOptions opt{1e-2, 2};
  const OperatorExpr l3 = build_operator(OpId::L3, fx), l4 = build_operator(OpId::L4, fx);
  for (int N = 0; N <= 2; ++N)
    for (int k = 0; k <= N; ++k) {
      const ParabolicState ep = p1_ep_state(fx, N, k, N - k);
      ScalarField f = [&](const AmbientPoint& q) {
        const ChartPoint c = ambient_to_chart(q, Chart::elliptic_parabolic);
        return cplx(p1_wf_elliptic_parabolic(ep, c.u1, c.u2));
      };
      CHECK(eigen_residual(l3, f, ep.separation, pe, opt).residual < 1e-6);
      const ParabolicState hp = p1_hp_state(fx, N, k, N - k);
      ScalarField g = [&](const AmbientPoint& q) {
        const ChartPoint c = ambient_to_chart(q, Chart::hyperbolic_parabolic);
        return cplx(p1_wf_hyperbolic_parabolic(hp, c.u1, c.u2));
      };
      CHECK(eigen_residual(l4, g, hp.separation, pe, opt).residual < 1e-6);
    }
}

TEST_CASE("linear relations") {
  const auto pts = sample(Chart::equidistant, 12, 5);
  const auto reps = check_linear_relations(fx, default_test_functions(), pts, {1e-3, 1});
  REQUIRE(reps.size() == 2);
  for (const auto& r : reps) {
    CHECK(r.residual <= 1e-5);
    CHECK(r.order >= 1.9);
    CHECK(r.pass);
  }
  const auto c = check_linear_relations(fx, {default_test_functions()[0]}, pts, {1e-3, 1});
  for (const auto& r : c) CHECK(r.residual <= 1e-12);
}

TEST_CASE("multiplet matrices and quadratic algebra") {
  for (const P1Params* p : {&fx, &other})
    for (int N = 0; N <= std::min(p->nmax, 2); ++N) {
      const auto w = ib_matrix(*p, N, IbMethod::hyp3f2);
      const MultipletRep rep = multiplet_matrices(*p, N, w);
      for (const auto& r : check_rep_consistency(rep, w, *p)) CHECK(r.pass);
      for (const auto& r : check_quadratic_algebra(rep, *p)) {
        INFO(r.id << " N=" << N);
        CHECK(r.residual <= 1e-10);
      }
    }
  const MultipletRep rep = multiplet_matrices(fx, 2, ib_matrix(fx, 2, IbMethod::hyp3f2));
  CHECK(rep.N1(0, 0) == Approx(49));
  CHECK(rep.N1(1, 1) == Approx(25));
  CHECK(rep.N1(2, 2) == Approx(9));
  const auto r0 = multiplet_matrices(fx, 0, ib_matrix(fx, 0, IbMethod::hyp3f2));
  CHECK(r0.R(0, 0) == 0.0);
  const Eigen::MatrixXd X = Eigen::MatrixXd::Random(3, 3);
  CHECK((symmetrize3(X, X, X) - 6 * X * X * X).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("projected R matches the commutator") {
  const auto pts = sample(Chart::equidistant, 24, 6);
  const MultipletRep rep = multiplet_matrices(fx, 2, ib_matrix(fx, 2, IbMethod::hyp3f2));
  const Eigen::MatrixXd Rp = project_r(fx, 2, pts, {5e-3, 2});
  const double scale = rep.R.cwiseAbs().maxCoeff();
  CHECK((Rp - rep.R).cwiseAbs().maxCoeff() / scale < 1e-5);
}

TEST_CASE("second potential operators") {
  const P2Params p = P2Params::make(0.1, 6.0, 1.0);
  const SemiHyperbolicParams cp{0.3, 1.2, 0.1};
  const auto pts = sample(Chart::equidistant, 60, 8);
  const DiffOptions opt;
  const OperatorExpr l1 = build_operator(OpId2::L1, p);
  const OperatorExpr l1b = cplx(-1.0) * build_operator(OpId2::L12, p) + cplx(p.beta * p.beta - p.alpha * p.alpha);
  for (int N = 0; N <= 2; ++N)
    for (auto [n, m] : p2_level_states(p, N)) {
      ScalarField f = [&, n = n, m = m](const AmbientPoint& q) {
        const ChartPoint c = ambient_to_chart(q, Chart::equidistant);
        return p2_wf_equidistant(p, n, m, c.u1, c.u2);
      };
      const auto r = eigen_residual(l1, f, p2_l1_eigenvalue(p, m), pts, opt);
      CHECK(r.residual < 1e-6);
      CHECK(r.used >= 50);
      CHECK(eigen_residual(l1b, f, p2_l1_eigenvalue(p, m), pts, opt).residual < 1e-6);
    }
  const OperatorExpr l2 = build_operator(OpId2::L2, p, cp);
  const OperatorExpr hd = build_operator(OpId2::H_decomposition, p);
  for (int N = 0; N <= 2; ++N)
    for (int k = 0; k <= N; ++k) {
      const SemiHyperbolicState st = p2_sh_state(p, N, k, cp);
      ScalarField f = [&](const AmbientPoint& q) { return p2_wf_semihyperbolic(st, q); };
      CHECK(eigen_residual(l2, f, st.lambda, pts, opt).residual < 1e-6);
      CHECK(std::abs(p2_sh_lambda_printed(p, cp, st.roots.roots) - st.lambda) > 1e-3);
      const double E = p2_energy(p, N);
      CHECK(eigen_residual(hd, f, E - 0.375, pts, opt).residual < 1e-6);
      CHECK(eigen_residual(hd, f, E - 0.75, pts, opt).residual > 1e-3);
    }
}
