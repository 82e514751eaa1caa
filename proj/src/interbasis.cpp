#include "hypersint/interbasis.hpp"

#include <cmath>
#include <string>

#include "hypersint/error.hpp"
#include "hypersint/quadrature.hpp"
#include "hypersint/specfun.hpp"
#include "polylog.hpp"

namespace hypersint {

const char* to_string(IbMethod m) {
  switch (m) {
    case IbMethod::quadrature: return "quadrature";
    case IbMethod::hyp3f2: return "3f2";
    case IbMethod::hahn: return "hahn";
  }
  return "?";
}

namespace {

struct Labels {
  int n, m, n1, n2;
  double mu, q;
};

Labels labels(const P1Params& p, int N, int n1, int m) {
  if (n1 < 0 || n1 > N || m < 0 || m > N) throw Error(ErrorKind::out_of_window, "interbasis index outside 0..N");
  return {N - m, m, n1, N - n1, p1_mu(p, m), p1_q(p, N)};
}

// log of m! mu/(mu-d-2n-1) C1 C2 K / (D n1! n2!)
double log_prefactor(const P1Params& p, const Labels& l) {
  const double d = p.d, c = p.c, mu = l.mu;
  const double gap = mu - d - 2 * l.n - 1;
  const double lc1 = 0.5 * (std::log(2.0) + log_gamma(l.n1 + 1.0) + 0.5 * std::log(c) - log_gamma(l.n1 + d + 1));
  const double lc2 = 0.5 * (std::log(2 * l.q) + log_gamma(l.n2 + 1.0) - 0.5 * std::log(c) - log_gamma(l.n2 + l.q + 1));
  const double lk = 0.5 * (std::log(2 * gap) + log_gamma(mu - l.n) + log_gamma(l.n + 1.0) - log_gamma(mu - d - l.n) -
                           log_gamma(1 + l.n + d));
  const double ld = 0.5 * (std::log(2 * mu) + log_gamma(l.m + 1.0) - log_gamma(l.m + mu + 1));
  return log_gamma(l.m + 1.0) + std::log(mu / gap) + lc1 + lc2 + lk - ld - log_gamma(l.n1 + 1.0) -
         log_gamma(l.n2 + 1.0);
}

double log_g(const P1Params& p, const Labels& l) {
  return log_gamma(1 + p.d + l.n1) + log_gamma(l.mu + l.m - p.d - l.n1) - std::log(2.0) - log_gamma(1 + l.mu + l.m);
}

double overlap_3f2(const P1Params& p, const Labels& l) {
  const int n = l.n;
  const double mu = l.mu, d = p.d;
  const double f = hyp3f2_unit(n, n + d - mu + 1, -mu - l.m, 1 - mu, 1 - mu - l.m + d + l.n1).real();
  const double sg = (n % 2 ? -1.0 : 1.0) * pochhammer(1 - mu, n);
  return sg * std::exp(log_g(p, l) - log_gamma(n + 1.0)) * f;
}

double overlap_hahn(const P1Params& p, const Labels& l) {
  const double Nh = l.mu + l.m - p.d - l.n1;
  const double h = hahn(l.n, p.d, -l.mu, l.mu + l.m, Nh).real();
  return std::exp(log_g(p, l)) * h / pochhammer(Nh - l.n, l.n);
}

}  // namespace

double ib_overlap_integral(const P1Params& p, int n, int m, int n1, double tol) {
  const double mu = p1_mu(p, m), d = p.d;
  const double sig = 1 + 2 * d + 2 * n1, kap = 1 + 2 * mu + 2 * m;
  // sinh^sig cosh^-kap da = u^sig (1-u^2)^((kap-sig)/2 - 1) du, cosh 2a = (1+u^2)/(1-u^2)
  auto f = [&](double u) {
    if (u <= 0 || u >= 1) return 0.0;
    const double w = (1 - u) * (1 + u);
    int sg = 1;
    const double lp = detail::log_abs_jacobi(n, d, -mu, (1 + u * u) / w, &sg);
    return sg * std::exp(sig * std::log(u) + ((kap - sig) / 2 - 1) * std::log(w) + lp);
  };
  return integrate_to(f, {Rule::tanh_sinh, 4, 0.0, 1.0, Transform::none}, tol).value;
}

double ib_entry(const P1Params& p, int N, int n1, int m, IbMethod method) {
  const Labels l = labels(p, N, n1, m);
  double B = 0;
  switch (method) {
    case IbMethod::quadrature: B = ib_overlap_integral(p, l.n, m, n1); break;
    case IbMethod::hyp3f2: B = overlap_3f2(p, l); break;
    case IbMethod::hahn: B = overlap_hahn(p, l); break;
  }
  const double v = (l.n % 2 ? -1.0 : 1.0) * std::exp(log_prefactor(p, l)) * B;
  if (!std::isfinite(v)) throw Error(ErrorKind::nonfinite, "non-finite interbasis coefficient");
  return v;
}

InterbasisMatrix ib_matrix(const P1Params& p, int N, IbMethod method) {
  p1_q(p, N);
  InterbasisMatrix w;
  w.N = N;
  w.method = method;
  w.W.resize(N + 1, N + 1);
  for (int n1 = 0; n1 <= N; ++n1)
    for (int m = 0; m <= N; ++m) w.W(n1, m) = ib_entry(p, N, n1, m, method);
  return w;
}

namespace {

cplx cgamma(double x) { return std::exp(log_gamma(cplx(x, 0.0))); }

// 2 * int_0^inf sinh^sig cosh^-kap P_n^{(d,-mu)}(cosh 2a) da, termwise Beta integrals
cplx printed_overlap(double d, double mu, int n, double sig, double kap) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  cplx sum = 0.0;
  const cplx lead = (n % 2 ? -1.0 : 1.0) * cgamma(n - mu + 1) / (cgamma(1 - mu) * cgamma(n + 1.0));
  for (int k = 0; k <= n; ++k) {
    const double ex = kap - 2 * k;
    if (!(sig > -1 && sig - ex < 0)) return {nan, nan};
    const cplx beta = cgamma((1 + sig) / 2) * cgamma((ex - sig) / 2) / cgamma((1 + ex) / 2);
    sum += pochhammer(cplx(-n), k) * pochhammer(cplx(n + d - mu + 1), k) /
           (pochhammer(cplx(1 - mu), k) * cgamma(k + 1.0)) * 0.5 * beta;
  }
  return 2.0 * lead * sum;
}

cplx printed_entry(const P1Params& p, const Labels& l, IbMethod method) {
  const double d = p.d, mu = l.mu, b2 = std::sqrt(2.0) * p.beta;
  const int n = l.n, m = l.m, n1 = l.n1, n2 = l.n2;
  const double gap = mu - d - 2 * n - 1;
  const double sg = n % 2 ? -1.0 : 1.0;
  auto G = [](double x) { return cgamma(x); };
  const double fm = std::tgamma(m + 1.0), fn = std::tgamma(n + 1.0), f1 = std::tgamma(n1 + 1.0),
               f2 = std::tgamma(n2 + 1.0);
  switch (method) {
    case IbMethod::quadrature: {
      const cplx pre = std::sqrt(fm * fn * b2 * gap * G(mu + m + 1) * G(mu - n) /
                                 (f1 * f2 * mu * G(n1 + d + 1) * G(n2 + d + 1) * G(n + d + 1) * G(mu - d - n)));
      return sg * pre * printed_overlap(d, mu, n, 1 + 2 * d + 2 * n1, 2 * mu + 2 * m - 1);
    }
    case IbMethod::hyp3f2: {
      const cplx pre = std::sqrt(fm * b2 * gap * (mu + m) * G(n1 + d + 1) /
                                 (fn * f1 * f2 * mu * G(n2 + d + 1) * G(n + d + 1) * G(mu - n - d)));
      const cplx g = G(mu) * G(mu + m - d - n1 - 1) / std::sqrt(G(mu - n) * G(mu + m));
      return sg / 2 * pre * g * hyp3f2_unit(n, n + d - mu + 1, 1 - mu - m, 1 - mu, 2 + n1 + d - mu - m);
    }
    case IbMethod::hahn: {
      const cplx pre = std::sqrt(fm * fn * b2 * gap * (mu + m) / (f1 * f2 * mu * G(n + d + 1) * G(mu - n - d))) *
                       std::sqrt(G(n1 + d + 1) * G(mu - n) / (G(n2 + d + 1) * G(mu + m)));
      return sg / 2 * pre * G(mu + m - d - n1 - n - 1) * hahn(n, d, -mu, mu + m + 1, mu + m - d - n1 - 1);
    }
  }
  return 0.0;
}

}  // namespace

Eigen::MatrixXcd ib_matrix_printed(const P1Params& p, int N, IbMethod method) {
  p1_q(p, N);
  Eigen::MatrixXcd W(N + 1, N + 1);
  for (int n1 = 0; n1 <= N; ++n1)
    for (int m = 0; m <= N; ++m) {
      try {
        W(n1, m) = printed_entry(p, labels(p, N, n1, m), method);
      } catch (const Error&) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        W(n1, m) = cplx(nan, nan);
      }
    }
  return W;
}

double ib_verify_expansion(const P1Params& p, const InterbasisMatrix& w, const std::vector<ExpansionPoint>& pts) {
  const int N = w.N;
  double worst = 0, scale = 0;
  std::vector<double> diff;
  for (const auto& pt : pts) {
    if (!(pt.y > 0)) throw Error(ErrorKind::domain, "horicyclic y must be positive");
    // inverse of x = e^b tanh a, y = e^b / cosh a
    const double a = std::asinh(pt.x / pt.y);
    const double b = std::log(pt.y) + 0.5 * std::log1p((pt.x / pt.y) * (pt.x / pt.y));
    for (int n1 = 0; n1 <= N; ++n1) {
      const double lhs = p1_wf_horicyclic(p, n1, N - n1, pt.x, pt.y);
      double rhs = 0;
      for (int m = 0; m <= N; ++m) rhs += w.W(n1, m) * p1_wf_equidistant(p, N - m, m, a, b);
      scale = std::max(scale, std::abs(lhs));
      diff.push_back(std::abs(lhs - rhs));
    }
  }
  for (double d : diff) worst = std::max(worst, d);
  return scale > 0 ? worst / scale : worst;
}

}  // namespace hypersint
