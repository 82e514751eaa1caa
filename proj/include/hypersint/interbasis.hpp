#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hypersint/potential1.hpp"

namespace hypersint {

enum class IbMethod { quadrature, hyp3f2, hahn };
const char* to_string(IbMethod m);

// W(n1, m): horicyclic state (n1, N - n1) = sum_m W(n1, m) equidistant state (N - m, m)
struct InterbasisMatrix {
  int N = 0;
  IbMethod method = IbMethod::quadrature;
  Eigen::MatrixXd W;
};

// overlap integral over a > 0, u = tanh a substitution
double ib_overlap_integral(const P1Params& p, int n, int m, int n1, double tol = 1e-12);

double ib_entry(const P1Params& p, int N, int n1, int m, IbMethod method);
InterbasisMatrix ib_matrix(const P1Params& p, int N, IbMethod method);

// coefficients exactly as printed, kept for discrepancy reports; may be complex or NaN
Eigen::MatrixXcd ib_matrix_printed(const P1Params& p, int N, IbMethod method);

struct ExpansionPoint {
  double x, y;
};
// max over points and horicyclic states of |lhs - rhs| / max|lhs|
double ib_verify_expansion(const P1Params& p, const InterbasisMatrix& w, const std::vector<ExpansionPoint>& pts);

}  // namespace hypersint
