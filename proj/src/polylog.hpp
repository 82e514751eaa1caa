#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include "hypersint/specfun.hpp"

namespace hypersint::detail {

// log|P_n^{(a,b)}(x)| for real x, scaled to stay finite for very large x
inline double log_abs_jacobi(int n, double a, double b, double x, int* sign) {
  if (std::abs(x) <= 1e8 || n == 0) {
    const double v = jacobi(n, a, b, x);
    *sign = v < 0 ? -1 : 1;
    return std::log(std::abs(v));
  }
  double q0 = 1.0, q1 = ((a + 1) + (a + b + 2) * (x - 1) / 2) / x;
  for (int k = 2; k <= n; ++k) {
    const double c1 = 2.0 * k * (k + a + b) * (2 * k + a + b - 2);
    const double c2x = (2 * k + a + b - 1) * ((2 * k + a + b) * (2 * k + a + b - 2) + (a * a - b * b) / x);
    const double c3 = 2.0 * (k + a - 1) * (k + b - 1) * (2 * k + a + b);
    const double q2 = (c2x * q1 - c3 * q0 / (x * x)) / c1;
    q0 = q1;
    q1 = q2;
  }
  *sign = q1 < 0 ? -1 : 1;
  return n * std::log(std::abs(x)) + std::log(std::abs(q1));
}

inline double log_abs_laguerre(int n, double a, double x, int* sign) {
  const double v = laguerre(n, a, x);
  *sign = v < 0 ? -1 : 1;
  return std::log(std::abs(v));
}

inline double log_cosh(double t) {
  t = std::abs(t);
  return t + std::log1p(std::exp(-2 * t)) - std::log(2.0);
}

inline double log_sinh(double t) {
  t = std::abs(t);
  if (t < 1) return std::log(std::sinh(t));
  return t + std::log1p(-std::exp(-2 * t)) - std::log(2.0);
}

// Normalized Poschl-Teller factor on t > 0, even extension for t < 0.
inline double pt_factor(double d, int n, double mu, double t) {
  const double gap = mu - d - 2 * n - 1;
  if (t == 0) return 0.0;
  const double lognorm = 0.5 * (std::log(2 * gap) + log_gamma(mu - n) + log_gamma(n + 1.0) -
                                log_gamma(mu - d - n) - log_gamma(1 + n + d));
  int sg = 1;
  const double lp = log_abs_jacobi(n, d, -mu, std::cosh(2 * t), &sg);
  return sg * std::exp(lognorm + (0.5 + d) * log_sinh(t) + (0.5 - mu) * log_cosh(t) + lp);
}

inline std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace hypersint::detail
