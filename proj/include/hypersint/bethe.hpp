#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <vector>

namespace hypersint {

using cplx = std::complex<double>;

// F_i = sum_{k != i} 2/(t_i - t_k) + sum_l w_l/(t_i - e_l) + linear
struct StieltjesSystem {
  std::vector<cplx> poles;
  std::vector<cplx> weights;
  cplx linear = 0.0;
};

std::vector<cplx> stieltjes_residual(const StieltjesSystem& sys, const std::vector<cplx>& t);

// Real interval used for seeding and for labelling roots.
struct Zone {
  double lo, hi;
  bool contains(double x, double tol = 1e-12) const { return x >= lo - tol && x <= hi + tol; }
};

struct RootSearch {
  std::vector<Zone> zones;   // seeds placed per zone split
  bool generic_seeds = true; // also seed across the whole real line
  bool complex_seeds = false; // give generic seeds random imaginary parts
  int random_starts = 64;
  std::uint64_t seed = 0;
  int max_iter = 200;
  double tol = 1e-12;        // Newton convergence on the scaled residual
};

// Distinct solutions found by damped Newton from the seeded starts, roots
// sorted by real part. Complex roots are kept.
std::vector<std::vector<cplx>> solve_stieltjes(const StieltjesSystem& sys, int n, const RootSearch& opt);

struct BetheRoots {
  std::vector<cplx> roots;
  double residual = 0.0;         // max |equation LHS| in the polynomial layout
  std::vector<int> zone_counts;  // roots per zone, zones in declaration order
  bool in_zones = true;          // every root real and inside some zone
};

std::vector<int> count_in_zones(const std::vector<cplx>& roots, const std::vector<Zone>& zones, bool* all_inside);

// HYPERSINT_SEED or 0.
std::uint64_t env_seed();

}  // namespace hypersint
