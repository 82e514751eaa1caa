#include "hypersint/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "hypersint/error.hpp"

namespace hypersint {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

cplx lanczos_log_gamma(cplx z) {
  z -= 1.0;
  cplx x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + double(i));
  const cplx t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// log sin(pi z) without overflow for large |Im z|
cplx log_sin_pi(cplx z) {
  const cplx w = kPi * z;
  const cplx I(0.0, 1.0);
  if (std::abs(w.imag()) < 20.0) return std::log(std::sin(w));
  if (w.imag() > 0) return -I * w + std::log(1.0 - std::exp(2.0 * I * w)) - std::log(-2.0 * I);
  return I * w + std::log(1.0 - std::exp(-2.0 * I * w)) - std::log(2.0 * I);
}

cplx wrap_imag(cplx z) {
  double im = std::remainder(z.imag(), 2.0 * kPi);
  if (im <= -kPi) im += 2.0 * kPi;
  return {z.real(), im};
}

double neumaier_add(double& sum, double& comp, double x) {
  const double t = sum + x;
  if (std::abs(sum) >= std::abs(x))
    comp += (sum - t) + x;
  else
    comp += (x - t) + sum;
  sum = t;
  return sum;
}

}  // namespace

cplx log_gamma(cplx z) {
  if (is_nonpositive_integer(z))
    throw Error(ErrorKind::pole, "log_gamma at z = " + std::to_string(z.real()));
  cplx r;
  if (z.real() < 0.5)
    r = std::log(kPi) - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
  else
    r = lanczos_log_gamma(z);
  return wrap_imag(r);
}

double log_gamma(double x) {
  if (x <= 0.0 && x == std::floor(x))
    throw Error(ErrorKind::pole, "log_gamma at x = " + std::to_string(x));
  if (x < 0.5) return std::log(kPi) - std::log(std::abs(std::sin(kPi * x))) - log_gamma(1.0 - x);
  x -= 1.0;
  double s = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) s += kLanczos[i] / (x + double(i));
  const double t = x + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (x + 0.5) * std::log(t) - t + std::log(s);
}

cplx pochhammer(cplx a, int n) {
  cplx r = 1.0;
  for (int k = 0; k < n; ++k) r *= a + double(k);
  return r;
}

double pochhammer(double a, int n) {
  double r = 1.0;
  for (int k = 0; k < n; ++k) r *= a + k;
  return r;
}

double laguerre(int n, double a, double x) {
  if (n < 0) throw Error(ErrorKind::invalid_argument, "laguerre degree < 0");
  if (n == 0) return 1.0;
  double l0 = 1.0, l1 = 1.0 + a - x;
  for (int k = 1; k < n; ++k) {
    const double l2 = ((2 * k + 1 + a - x) * l1 - (k + a) * l0) / (k + 1);
    l0 = l1;
    l1 = l2;
  }
  return l1;
}

namespace {

// explicit binomial sum, used when the recurrence hits a zero leading coefficient
cplx jacobi_sum(int n, cplx a, cplx b, cplx x) {
  const cplx xm = (x - 1.0) / 2.0, xp = (x + 1.0) / 2.0;
  auto binom = [](cplx top, int j) {
    cplx r = 1.0;
    for (int i = 0; i < j; ++i) r *= (top - double(i)) / double(i + 1);
    return r;
  };
  cplx s = 0.0;
  for (int k = 0; k <= n; ++k)
    s += binom(double(n) + a, n - k) * binom(double(n) + b, k) * std::pow(xm, k) *
         std::pow(xp, n - k);
  return s;
}

}  // namespace

cplx jacobi(int n, cplx a, cplx b, cplx x) {
  if (n < 0) throw Error(ErrorKind::invalid_argument, "jacobi degree < 0");
  if (n == 0) return 1.0;
  cplx p0 = 1.0;
  cplx p1 = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0;
  for (int k = 2; k <= n; ++k) {
    const double kk = k;
    const cplx c1 = 2.0 * kk * (kk + a + b) * (2.0 * kk + a + b - 2.0);
    if (std::abs(c1) < 1e-12) return jacobi_sum(n, a, b, x);
    const cplx c2 = (2.0 * kk + a + b - 1.0) *
                    ((2.0 * kk + a + b) * (2.0 * kk + a + b - 2.0) * x + a * a - b * b);
    const cplx c3 = 2.0 * (kk + a - 1.0) * (kk + b - 1.0) * (2.0 * kk + a + b);
    const cplx p2 = (c2 * p1 - c3 * p0) / c1;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double jacobi(int n, double a, double b, double x) { return jacobi(n, cplx(a), cplx(b), cplx(x)).real(); }

namespace {

cplx hyp2f1_series(cplx a, cplx b, cplx c, cplx z) {
  cplx sum = 1.0, term = 1.0;
  for (int k = 0; k < 10000; ++k) {
    term *= (a + double(k)) * (b + double(k)) / ((c + double(k)) * double(k + 1)) * z;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) return sum;
  }
  throw Error(ErrorKind::no_convergence, "hyp2f1 series did not converge in 10000 terms");
}

cplx rgamma(cplx z) { return is_nonpositive_integer(z) ? cplx(0.0) : std::exp(-log_gamma(z)); }

}  // namespace

cplx hyp2f1(cplx a, cplx b, cplx c, cplx z) {
  int n = -1;
  if (is_nonpositive_integer(a)) n = int(-a.real());
  if (is_nonpositive_integer(b)) {
    const int nb = int(-b.real());
    n = n < 0 ? nb : std::min(n, nb);
  }
  if (n >= 0) {
    cplx sum = 1.0, term = 1.0;
    for (int k = 0; k < n; ++k) {
      if (std::abs(c + double(k)) == 0.0)
        throw Error(ErrorKind::parameter_pole, "hyp2f1: c hits a non-positive integer");
      term *= (a + double(k)) * (b + double(k)) / ((c + double(k)) * double(k + 1)) * z;
      sum += term;
    }
    return sum;
  }
  if (is_nonpositive_integer(c))
    throw Error(ErrorKind::parameter_pole, "hyp2f1: c is a non-positive integer");
  const double az = std::abs(z);
  if (az >= 1.0) throw Error(ErrorKind::no_convergence, "hyp2f1: |z| >= 1 and non-terminating");
  if (az <= 0.5) return hyp2f1_series(a, b, c, z);

  const cplx w = z / (z - 1.0);
  const cplx cab = c - a - b;
  const bool one_minus_ok = !(cab.imag() == 0.0 && cab.real() == std::round(cab.real()));
  const double aw = std::abs(w), a1 = one_minus_ok ? std::abs(1.0 - z) : 2.0;
  if (aw <= a1 && aw < az) return std::pow(1.0 - z, -a) * hyp2f1_series(a, c - b, c, w);
  if (a1 < az) {
    const cplx lg_c = log_gamma(c);
    const cplx t1 = std::exp(lg_c + log_gamma(cab)) * rgamma(c - a) * rgamma(c - b) *
                    hyp2f1_series(a, b, a + b - c + 1.0, 1.0 - z);
    const cplx t2 = std::pow(1.0 - z, cab) * std::exp(lg_c + log_gamma(-cab)) * rgamma(a) *
                    rgamma(b) * hyp2f1_series(c - a, c - b, cab + 1.0, 1.0 - z);
    return t1 + t2;
  }
  return hyp2f1_series(a, b, c, z);
}

cplx hyp3f2_unit(int n, cplx b, cplx c, cplx d, cplx e) {
  if (n < 0) throw Error(ErrorKind::invalid_argument, "hyp3f2_unit: n < 0");
  double sr = 1.0, cr = 0.0, si = 0.0, ci = 0.0;
  cplx term = 1.0;
  for (int k = 0; k < n; ++k) {
    const cplx dk = d + double(k), ek = e + double(k);
    if (dk == 0.0 || ek == 0.0)
      throw Error(ErrorKind::parameter_pole, "hyp3f2_unit: lower parameter hits a non-positive integer");
    term *= double(k - n) * (b + double(k)) * (c + double(k)) / (dk * ek * double(k + 1));
    neumaier_add(sr, cr, term.real());
    neumaier_add(si, ci, term.imag());
  }
  const cplx r(sr + cr, si + ci);
  if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
    throw Error(ErrorKind::nonfinite, "hyp3f2_unit");
  return r;
}

cplx hahn(int n, cplx alpha, cplx beta, cplx x, cplx N) {
  if (n < 0) throw Error(ErrorKind::invalid_argument, "hahn: n < 0");
  // Γ(N)/Γ(N-n) = (N-n)_n and Γ(β+n+1)/Γ(β+1) = (β+1)_n
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  const cplx pref = sign * pochhammer(N - double(n), n) * pochhammer(beta + 1.0, n) /
                    std::exp(log_gamma(double(n + 1)));
  return pref * hyp3f2_unit(n, alpha + beta + double(n) + 1.0, -x, beta + 1.0, 1.0 - N);
}

}  // namespace hypersint
