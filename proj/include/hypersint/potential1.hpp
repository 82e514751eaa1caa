#pragma once

#include <array>
#include <vector>

#include "hypersint/bethe.hpp"
#include "hypersint/geometry.hpp"
#include "hypersint/quadrature.hpp"

namespace hypersint {

struct P1Params {
  double alpha = 1, beta = 1, gamma = 1;
  double d = 0;     // sqrt(2 alpha^2 + 1/4)
  double s = 0;     // gamma^2 / (sqrt2 beta)
  double c = 0;     // sqrt2 beta
  int nmax = -1;    // -1: no bound states

  static P1Params make(double alpha, double beta, double gamma);
};

double v1_ambient(const P1Params& p, const AmbientPoint& q);
double v1_equidistant(const P1Params& p, double t1, double t2);
double v1_horicyclic(const P1Params& p, double x, double y);

double p1_energy(const P1Params& p, int N);
int p1_m_max(const P1Params& p);
double p1_mu(const P1Params& p, int m);
// sqrt(-2E + 1/4) on level N
double p1_q(const P1Params& p, int N);
// (n, m) pairs with n + m = N
std::vector<std::array<int, 2>> p1_level_states(const P1Params& p, int N);

// Energies obtained from the horicyclic condition lambda1 + lambda2 = 1 and
// from the elliptic-parabolic quantization condition.
double p1_lambda1(const P1Params& p, int n1);
double p1_lambda2(const P1Params& p, int n2, double q);
double p1_energy_horicyclic(const P1Params& p, int N);
double p1_energy_elliptic_parabolic(const P1Params& p, int N);

// Equidistant factors, each normalized in its own variable (S1 on tau1 > 0).
double p1_s1(const P1Params& p, int n, double mu, double t1);
double p1_s2(const P1Params& p, int m, double t2);
double p1_wf_equidistant(const P1Params& p, int n, int m, double t1, double t2);

// Horicyclic factors: psi1 normalized in dx on x > 0, psi2 in dy/y^2.
double p1_psi1(const P1Params& p, int n1, double x);
double p1_psi2(const P1Params& p, int n2, int N, double y);
double p1_wf_horicyclic(const P1Params& p, int n1, int n2, double x, double y);

double p1_l1_eigenvalue(const P1Params& p, int m);
double p1_l2_eigenvalue(const P1Params& p, int n1);
double p1_l2_eigenvalue_printed(const P1Params& p, int n1);
double p1_n2_eigenvalue(const P1Params& p, int n1);

enum class ZeroForm { derived, printed };

StieltjesSystem p1_ep_system(const P1Params& p, int N, ZeroForm form);
StieltjesSystem p1_hp_system(const P1Params& p, int N, ZeroForm form);
// left-hand side of equation i in the polynomial layout
double p1_ep_equation(const P1Params& p, const std::vector<cplx>& roots, int i, ZeroForm form);
double p1_hp_equation(const P1Params& p, const std::vector<cplx>& roots, int i, ZeroForm form);

std::vector<Zone> p1_ep_zones();  // [0,1], [1,inf)
std::vector<Zone> p1_hp_zones();  // [0,inf), [-1,0]

struct RootOptions {
  double accept = 1e-10;
  std::uint64_t seed = 0;
};

std::vector<BetheRoots> p1_ep_roots(const P1Params& p, int N, ZeroForm form = ZeroForm::derived,
                                    const RootOptions& opt = {});
std::vector<BetheRoots> p1_hp_roots(const P1Params& p, int N, ZeroForm form = ZeroForm::derived,
                                    const RootOptions& opt = {});

double p1_ep_lambda(const P1Params& p, const std::vector<cplx>& roots);
double p1_hp_tau(const P1Params& p, const std::vector<cplx>& roots);

// Product-form state of a parabolic chart, normalized by quadrature.
struct ParabolicState {
  P1Params params;
  Chart chart = Chart::elliptic_parabolic;
  int N = 0;
  int first = 0, second = 0;  // (p, q) or (l, k)
  BetheRoots roots;
  double separation = 0;      // lambda or tau
  double log_norm = 0;        // log of the L2 norm of the raw product form
};

ParabolicState p1_ep_state(const P1Params& p, int N, int pc, int qc, const RootOptions& opt = {},
                           int quad_level = 6);
ParabolicState p1_hp_state(const P1Params& p, int N, int lc, int kc, const RootOptions& opt = {},
                           int quad_level = 6);

// log|raw product form| and its sign
double p1_parabolic_log_abs(const ParabolicState& st, double u1, double u2, int* sign);
double p1_wf_elliptic_parabolic(const ParabolicState& st, double a, double th);
double p1_wf_hyperbolic_parabolic(const ParabolicState& st, double b, double th);

// Riemannian area elements of the charts.
double area_element(Chart c, double u1, double u2);

}  // namespace hypersint
