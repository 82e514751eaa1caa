#include "hypersint/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "hypersint/error.hpp"

namespace hypersint {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

struct Node {
  double x, w;
};

std::vector<Node> gauss_legendre_nodes(int n) {
  std::vector<Node> out(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    out[i] = {x, w};
    out[n - 1 - i] = {-x, w};
  }
  return out;
}

// Integrand expressed on a standard variable t together with the map.
using Mapped = std::function<double(double)>;

void check_finite(double v, double x) {
  if (!std::isfinite(v))
    throw Error(ErrorKind::nonfinite, "integrand is not finite at x = " + std::to_string(x));
}

double gl_sum(const Mapped& g, double a, double b, int n) {
  const auto nodes = gauss_legendre_nodes(n);
  const double mid = (a + b) / 2, r = (b - a) / 2;
  double s = 0.0;
  for (const auto& nd : nodes) s += nd.w * g(mid + r * nd.x);
  return s * r;
}

// Trapezoid sum in t with step h of the double-exponential integrand phi(t)
// (which already includes the Jacobian). Marches outward from 0 and stops once
// contributions stay negligible.
double de_sum(const std::function<double(double, bool&)>& phi, double h, double tmax) {
  bool stop = false;
  double s = phi(0.0, stop);
  for (int dir : {1, -1}) {
    int small = 0;
    for (int k = 1;; ++k) {
      const double t = dir * k * h;
      if (std::abs(t) > tmax) break;
      bool end = false;
      const double v = phi(t, end);
      if (end) break;
      s += v;
      if (std::abs(v) <= 1e-18 * std::abs(s) && std::abs(t) >= 1.0) {
        if (++small >= 3) break;
      } else {
        small = 0;
      }
    }
  }
  return s * h;
}

std::function<double(double, bool&)> de_integrand(const std::function<double(double)>& f,
                                                  const QuadratureSpec& s) {
  const bool lo_inf = std::isinf(s.lo), hi_inf = std::isinf(s.hi);
  if (!lo_inf && !hi_inf) {
    const double r = (s.hi - s.lo) / 2;
    return [=, &f](double t, bool& end) {
      const double u = kHalfPi * std::sinh(t);
      const double ch = std::cosh(u);
      const double w = kHalfPi * std::cosh(t) / (ch * ch);
      // distance to the nearer endpoint computed without cancellation
      const double delta = r * 2.0 / (1.0 + std::exp(2.0 * std::abs(u)));
      const double x = t >= 0 ? s.hi - delta : s.lo + delta;
      if (x <= s.lo || x >= s.hi || w * r < 1e-300) {
        end = true;
        return 0.0;
      }
      const double v = f(x);
      check_finite(v, x);
      return w * r * v;
    };
  }
  if (lo_inf && hi_inf) {
    return [&f](double t, bool& end) {
      const double u = kHalfPi * std::sinh(t);
      const double x = std::sinh(u);
      const double w = kHalfPi * std::cosh(t) * std::cosh(u);
      if (!std::isfinite(w) || std::abs(x) > 1e300) {
        end = true;
        return 0.0;
      }
      const double v = f(x);
      check_finite(v, x);
      return w * v;
    };
  }
  const double base = lo_inf ? s.hi : s.lo;
  const double sgn = lo_inf ? -1.0 : 1.0;
  return [=, &f](double t, bool& end) {
    const double e = std::exp(kHalfPi * std::sinh(t));
    const double x = base + sgn * e;
    const double w = kHalfPi * std::cosh(t) * e;
    if (x == base || !std::isfinite(w) || e > 1e300) {
      end = true;
      return 0.0;
    }
    const double v = f(x);
    check_finite(v, x);
    return w * v;
  };
}

double tanh_sinh_level(const std::function<double(double)>& f, const QuadratureSpec& s, int level) {
  const double h = std::ldexp(1.0, 1 - level);
  return de_sum(de_integrand(f, s), h, 7.0);
}

// Reduce to a finite standard interval for Gauss-Legendre.
double gl_level(const std::function<double(double)>& f, const QuadratureSpec& s, int level) {
  const int n = 4 << level;
  const bool lo_inf = std::isinf(s.lo), hi_inf = std::isinf(s.hi);
  auto eval = [&f](double x, double jac) {
    const double v = f(x);
    check_finite(v, x);
    return v * jac;
  };
  if (!lo_inf && !hi_inf) return gl_sum([&](double x) { return eval(x, 1.0); }, s.lo, s.hi, n);
  if (lo_inf && hi_inf) {
    if (s.transform == Transform::exp_map)
      return gl_sum([&](double t) { return eval(std::log(t / (1 - t)), 1.0 / (t * (1 - t))); }, 0, 1, n);
    return gl_sum(
        [&](double t) { return eval(t / (1 - t * t), (1 + t * t) / ((1 - t * t) * (1 - t * t))); }, -1,
        1, n);
  }
  const double base = lo_inf ? s.hi : s.lo;
  const double sgn = lo_inf ? -1.0 : 1.0;
  if (s.transform == Transform::exp_map)
    return gl_sum([&](double t) { return eval(base - sgn * std::log(t), 1.0 / t); }, 0, 1, n);
  return gl_sum([&](double t) { return eval(base + sgn * t / (1 - t), 1.0 / ((1 - t) * (1 - t))); }, 0,
                1, n);
}

// Algebraic map followed by tanh-sinh on the finite image.
double tanh_sinh_algebraic(const std::function<double(double)>& f, const QuadratureSpec& s, int level) {
  const bool lo_inf = std::isinf(s.lo), hi_inf = std::isinf(s.hi);
  QuadratureSpec fin = s;
  fin.transform = Transform::none;
  if (lo_inf && hi_inf) {
    fin.lo = -1;
    fin.hi = 1;
    auto g = [&f](double t) {
      const double d = 1 - t * t;
      const double x = t / d;
      const double v = f(x);
      check_finite(v, x);
      return v * (1 + t * t) / (d * d);
    };
    return tanh_sinh_level(g, fin, level);
  }
  const double base = lo_inf ? s.hi : s.lo;
  const double sgn = lo_inf ? -1.0 : 1.0;
  fin.lo = 0;
  fin.hi = 1;
  auto g = [&](double t) {
    const double x = base + sgn * t / (1 - t);
    const double v = f(x);
    check_finite(v, x);
    return v / ((1 - t) * (1 - t));
  };
  return tanh_sinh_level(g, fin, level);
}

void validate(const QuadratureSpec& s) {
  if (s.level < 1) throw Error(ErrorKind::invalid_argument, "quadrature level must be >= 1");
  if (!(s.lo < s.hi)) throw Error(ErrorKind::invalid_argument, "quadrature domain requires lo < hi");
  if ((std::isinf(s.lo) || std::isinf(s.hi)) && s.transform == Transform::none)
    throw Error(ErrorKind::invalid_argument, "infinite quadrature domain needs a transform");
}

double level_value(const std::function<double(double)>& f, const QuadratureSpec& s, int level) {
  const bool infinite = std::isinf(s.lo) || std::isinf(s.hi);
  if (s.rule == Rule::gauss_legendre) return gl_level(f, s, level);
  if (infinite && s.transform == Transform::algebraic_map) return tanh_sinh_algebraic(f, s, level);
  return tanh_sinh_level(f, s, level);
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, const QuadratureSpec& spec) {
  validate(spec);
  const double v = level_value(f, spec, spec.level);
  const double coarse = level_value(f, spec, spec.level == 1 ? 1 : spec.level - 1);
  return {v, spec.level == 1 ? std::abs(v) : std::abs(v - coarse)};
}

QuadResult integrate_to(const std::function<double(double)>& f, QuadratureSpec spec, double tol,
                        int max_level) {
  validate(spec);
  double prev = level_value(f, spec, spec.level);
  for (int lv = spec.level + 1; lv <= max_level; ++lv) {
    const double v = level_value(f, spec, lv);
    const double err = std::abs(v - prev);
    if (err <= tol * std::max(1.0, std::abs(v))) return {v, err};
    prev = v;
  }
  throw Error(ErrorKind::quadrature_failure,
              "no agreement to " + std::to_string(tol) + " by level " + std::to_string(max_level));
}

}  // namespace hypersint
