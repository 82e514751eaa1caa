#pragma once

#include <array>
#include <vector>

#include "hypersint/bethe.hpp"
#include "hypersint/geometry.hpp"

namespace hypersint {

struct P2Params {
  double alpha = 1, beta = 1, gamma = 1;
  double B = 0;  // 2 beta^2 - 2 alpha^2 + 1
  double M = 0;
  double d = 0;  // sqrt(2 alpha^2 + 1/4)
  cplx a;        // Re a < 0 root of a^2 = (B - i gamma^2)/4
  cplx k1, k2;   // a, conj(a)
  double k3 = 0; // d
  int nmax = -1;
  static P2Params make(double alpha, double beta, double gamma);
};

double v2_ambient(const P2Params& p, const AmbientPoint& q);
double v2_equidistant(const P2Params& p, double t1, double t2);
// chart form with the sign of the alpha term as printed
double v2_equidistant_printed(const P2Params& p, double t1, double t2);

int p2_m_max(const P2Params& p);
double p2_mu(const P2Params& p, int m);
double p2_energy(const P2Params& p, int N);
// same level from the semi-hyperbolic constants k1 + k2 + k3
double p2_energy_semihyperbolic(const P2Params& p, int N);
std::vector<std::array<int, 2>> p2_level_states(const P2Params& p, int N);
double p2_l1_eigenvalue(const P2Params& p, int m);

// S(tau2) is real; returned complex so the realness can be checked
cplx p2_s(const P2Params& p, int m, double t2);
double p2_z(const P2Params& p, int n, double mu, double t1);
cplx p2_wf_equidistant(const P2Params& p, int n, int m, double t1, double t2);

// e1 = a_c + i b_c, e2 = conj(e1), e3
std::array<cplx, 3> p2_sh_poles(const SemiHyperbolicParams& cp);
StieltjesSystem p2_sh_system(const P2Params& p, const SemiHyperbolicParams& cp);
std::vector<cplx> p2_sh_equation(const P2Params& p, const SemiHyperbolicParams& cp, const std::vector<cplx>& roots);
// residual: max |F_i| * max(1, |theta_i|)
std::vector<BetheRoots> p2_sh_roots(const P2Params& p, int N, const SemiHyperbolicParams& cp,
                                    double accept = 1e-10, std::uint64_t seed = 0);
cplx p2_sh_lambda(const P2Params& p, const SemiHyperbolicParams& cp, const std::vector<cplx>& roots);
cplx p2_sh_lambda_printed(const P2Params& p, const SemiHyperbolicParams& cp, const std::vector<cplx>& roots);

// sum_l s_l^2/(theta - e_l) and the rational form in the chart coordinates
cplx p2_sh_factor(const SemiHyperbolicParams& cp, const AmbientPoint& q, cplx theta);
cplx p2_sh_factor_rational(const SemiHyperbolicParams& cp, cplx mu, cplx nu, cplx theta);

struct SemiHyperbolicState {
  P2Params params;
  SemiHyperbolicParams chart_params;
  int N = 0;
  BetheRoots roots;
  cplx lambda = 0.0;
  cplx phase = 1.0;  // global phase removed from the raw product form
};

SemiHyperbolicState p2_sh_state(const P2Params& p, int N, int index, const SemiHyperbolicParams& cp,
                                std::uint64_t seed = 0, double accept = 1e-10);
cplx p2_sh_raw(const SemiHyperbolicState& st, const AmbientPoint& q);
// raw product form divided by the reference phase
cplx p2_wf_semihyperbolic(const SemiHyperbolicState& st, const AmbientPoint& q);

}  // namespace hypersint
