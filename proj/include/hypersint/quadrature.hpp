#pragma once

#include <functional>
#include <limits>

namespace hypersint {

enum class Rule { gauss_legendre, tanh_sinh };

// exp_map: double-exponential maps for infinite ranges (exp-sinh on a half
// line, sinh-sinh on the whole line). algebraic_map: x = lo + t/(1-t) on a half
// line, x = t/(1-t^2) on the whole line, then the finite rule.
enum class Transform { none, exp_map, algebraic_map };

struct QuadratureSpec {
  Rule rule = Rule::tanh_sinh;
  int level = 6;
  double lo = 0.0;
  double hi = 1.0;
  Transform transform = Transform::none;
};

struct QuadResult {
  double value = 0.0;
  double err = 0.0;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

QuadResult integrate(const std::function<double(double)>& f, const QuadratureSpec& spec);

// Raises the level until two successive estimates agree to tol (relative to
// max(1, |value|)). Throws quadrature_failure past max_level.
QuadResult integrate_to(const std::function<double(double)>& f, QuadratureSpec spec, double tol,
                        int max_level = 12);

}  // namespace hypersint
