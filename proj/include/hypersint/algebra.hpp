#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "hypersint/geometry.hpp"
#include "hypersint/interbasis.hpp"
#include "hypersint/potential1.hpp"
#include "hypersint/potential2.hpp"

namespace hypersint {

enum class OpId { L1, L2, L3, L4, N1, N2, R, H };
enum class OpId2 { L1, L12, L13, L23, L2, H, H_decomposition };

const char* to_string(OpId id);
const char* to_string(OpId2 id);

OperatorExpr build_operator(OpId id, const P1Params& p);
// L2 and H_decomposition need the semi-hyperbolic constants; H_decomposition
// is (L12 + L13 + L23)/2 - sum k^2/2 without the additive constant
OperatorExpr build_operator(OpId2 id, const P2Params& p, const SemiHyperbolicParams& cp = {});

// Chart forms of L3 (elliptic-parabolic) and L4 (hyperbolic-parabolic),
// second derivatives taken in the chart variables.
double apply_l3_chart(const P1Params& p, const RealField& f, double a, double th, const DiffOptions& opt);
double apply_l4_chart(const P1Params& p, const RealField& f, double b, double th, const DiffOptions& opt);

struct EigenResidual {
  double residual = 0;  // max |op psi - lambda psi| / (max(1,|lambda|) |psi|)
  int used = 0;         // points with |psi| >= 1e-3 max|psi|
  int skipped = 0;
};
EigenResidual eigen_residual(const OperatorExpr& op, const ScalarField& psi, cplx lambda,
                             const std::vector<AmbientPoint>& pts, const DiffOptions& opt = {});

struct AlgebraReport {
  std::string id;
  double residual = 0;
  double tolerance = 0;
  bool pass = false;
  bool hard = true;   // soft checks report but never fail a run
  double offset = 0;  // fitted constant c in LHS - RHS ~ c I
  double residual_after_offset = 0;
  double order = 0;   // observed convergence order where relevant
  std::string notes;
};

struct MultipletRep {
  int N = 0;
  double E = 0;
  Eigen::MatrixXd N1, N2, R;  // equidistant basis, index m
};

// N2 = W^T diag(nu) W with nu the horicyclic N2 eigenvalues
MultipletRep multiplet_matrices(const P1Params& p, int N, const InterbasisMatrix& w);

// {A,B,C} summed over the six orderings
Eigen::MatrixXd symmetrize3(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, const Eigen::MatrixXd& c);

std::vector<AlgebraReport> check_quadratic_algebra(const MultipletRep& rep, const P1Params& p,
                                                   double tol = 1e-6);
std::vector<AlgebraReport> check_rep_consistency(const MultipletRep& rep, const InterbasisMatrix& w,
                                                 const P1Params& p);

// R from the differential expression, projected on the level by collocation
Eigen::MatrixXd project_r(const P1Params& p, int N, const std::vector<AmbientPoint>& pts, const DiffOptions& opt);

struct TestFunction {
  std::string name;
  RealField f;
};
std::vector<TestFunction> default_test_functions();

// relations L3 + L2 + L1 = 0 and L4 - L2 + L1 = 0, the parabolic operators in
// chart form; residual normalized by the largest single term
std::vector<AlgebraReport> check_linear_relations(const P1Params& p, const std::vector<TestFunction>& fns,
                                                  const std::vector<AmbientPoint>& pts, const DiffOptions& opt,
                                                  double tol = 1e-5);

}  // namespace hypersint
