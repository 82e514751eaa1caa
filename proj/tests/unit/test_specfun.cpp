#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "doctest.h"
#include "hypersint/error.hpp"
#include "hypersint/quadrature.hpp"
#include "hypersint/specfun.hpp"

using namespace hypersint;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

void check_close(cplx got, cplx want, double tol) {
  CHECK(std::abs(got - want) <= tol * std::max(1.0, std::abs(want)));
}

// exact rational numbers for the 3F2 oracle
struct Frac {
  __int128 p = 0, q = 1;
  Frac(__int128 a = 0, __int128 b = 1) : p(a), q(b) { norm(); }
  void norm() {
    if (q < 0) p = -p, q = -q;
    __int128 a = p < 0 ? -p : p, b = q;
    while (b) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) p /= a, q /= a;
  }
  Frac operator+(Frac o) const { return {p * o.q + o.p * q, q * o.q}; }
  Frac operator*(Frac o) const { return {p * o.p, q * o.q}; }
  Frac operator/(Frac o) const { return {p * o.q, q * o.p}; }
  double value() const { return double(p) / double(q); }
};

Frac rational_3f2(int n, Frac b, Frac c, Frac d, Frac e) {
  Frac sum(1), term(1);
  for (int k = 0; k < n; ++k) {
    term = term * Frac(k - n) * (b + Frac(k)) * (c + Frac(k)) / ((d + Frac(k)) * (e + Frac(k)) * Frac(k + 1));
    sum = sum + term;
  }
  return sum;
}

}  // namespace

TEST_CASE("log_gamma basic values") {
  CHECK(std::abs(log_gamma(cplx(1.0))) < 1e-15);
  check_close(log_gamma(cplx(5.0)), std::log(24.0), 1e-14);
  CHECK(log_gamma(5.0) == Approx(std::log(24.0)).epsilon(1e-14));
  CHECK(log_gamma(-0.5) == Approx(std::log(2 * std::sqrt(kPi))).epsilon(1e-14));
  CHECK_THROWS_AS(log_gamma(cplx(-3.0)), Error);
  CHECK_THROWS_AS(log_gamma(0.0), Error);
}

TEST_CASE("log_gamma against high-precision values") {
  struct Case {
    cplx z, want;
  };
  const Case cases[] = {
      {{1, 1}, {-0.65092319930185633889, -0.30164032046753319789}},
      {{3.7, -2.2}, {0.72644675162442647431, -2.7180642924411456664}},
      {{-2.5, 0.3}, {-0.43208889261320192052, -2.8101601141101550304}},
      {{50, 30}, {135.96296410344415869, -0.65753019407909752031}},
      {{0.1, 90}, {-142.25265400571577347, 0.19486051121607133275}},
  };
  for (const auto& c : cases) {
    const cplx g = log_gamma(c.z);
    CHECK(std::abs(g.real() - c.want.real()) <= 1e-13 * std::max(1.0, std::abs(c.want.real())));
    // compare imaginary parts modulo 2 pi
    const double dim = std::remainder(g.imag() - c.want.imag(), 2 * kPi);
    CHECK(std::abs(dim) <= 1e-12 * std::max(1.0, std::abs(c.want)));
  }
}

TEST_CASE("gamma reflection identity") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> re(-5, 5), im(-3, 3);
  int n = 0;
  while (n < 100) {
    const cplx z(re(rng), im(rng));
    if (std::abs(z.imag()) < 0.05 && std::abs(z.real() - std::round(z.real())) < 0.05) continue;
    ++n;
    const cplx v = std::exp(log_gamma(z) + log_gamma(1.0 - z)) * std::sin(kPi * z) / kPi;
    CHECK(std::abs(v - 1.0) <= 1e-10);
  }
}

TEST_CASE("laguerre closed forms and orthogonality") {
  CHECK(laguerre(0, 0.7, 3.1) == 1.0);
  CHECK(laguerre(1, 0.7, 3.1) == Approx(1 + 0.7 - 3.1));
  CHECK(laguerre(2, 0.0, 2.0) == Approx(-1.0).epsilon(1e-15));
  for (double a : {0.0, 0.5, 1.5})
    for (int n = 0; n <= 6; ++n)
      for (int m = 0; m <= n; ++m) {
        QuadratureSpec s{Rule::tanh_sinh, 7, 0.0, kInf, Transform::exp_map};
        auto f = [&](double x) { return std::pow(x, a) * std::exp(-x) * laguerre(n, a, x) * laguerre(m, a, x); };
        const double want = n == m ? std::exp(log_gamma(n + a + 1) - log_gamma(n + 1.0)) : 0.0;
        CHECK(std::abs(integrate(f, s).value - want) <= 1e-9);
      }
}

TEST_CASE("jacobi closed forms, orthogonality and conjugation") {
  const cplx a(0.3, -0.2), b(1.1, 0.4), x(0.25, 0.5);
  CHECK(jacobi(0, a, b, x) == cplx(1.0));
  check_close(jacobi(1, a, b, x), (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0, 1e-15);
  CHECK(jacobi(2, 0.0, 0.0, 0.5) == Approx(-0.125).epsilon(1e-15));

  for (auto [pa, pb] : {std::pair{0.5, -0.3}, std::pair{1.5, 2.0}, std::pair{-0.6, 0.0}})
    for (int n = 0; n <= 5; ++n)
      for (int m = 0; m <= n; ++m) {
        // split at 0 so that each singular endpoint sits at the origin of its own variable
        QuadratureSpec s{Rule::tanh_sinh, 7, 0.0, 1.0, Transform::none};
        auto upper = [&](double y) {
          const double t = 1 - y;
          return std::pow(y, pa) * std::pow(2 - y, pb) * jacobi(n, pa, pb, t) * jacobi(m, pa, pb, t);
        };
        auto lower = [&](double y) {
          const double t = y - 1;
          return std::pow(2 - y, pa) * std::pow(y, pb) * jacobi(n, pa, pb, t) * jacobi(m, pa, pb, t);
        };
        double want = 0;
        if (n == m)
          want = std::exp((pa + pb + 1) * std::log(2.0) - std::log(2 * n + pa + pb + 1) + log_gamma(n + pa + 1) +
                          log_gamma(n + pb + 1) - log_gamma(n + pa + pb + 1) - log_gamma(n + 1.0));
        CHECK(std::abs(integrate(upper, s).value + integrate(lower, s).value - want) <= 1e-9);
      }

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int i = 0; i < 30; ++i) {
    const cplx ca(u(rng), u(rng));
    const cplx z = (i % 2) ? cplx(u(rng), 0) : cplx(0, u(rng));
    const int n = i % 7;
    check_close(jacobi(n, std::conj(ca), ca, std::conj(z)), std::conj(jacobi(n, ca, std::conj(ca), z)), 1e-12);
  }
}

TEST_CASE("jacobi against high-precision values") {
  const cplx a(-1.2, 0.7);
  check_close(jacobi(3, a, std::conj(a), cplx(0, 0.4)), {0.0, -0.61444133333333334584}, 1e-13);
  check_close(jacobi(5, a, std::conj(a), cplx(0, -1.3)), {0.0, -5.0841310801866680254}, 1e-13);
  check_close(jacobi(4, a, std::conj(a), cplx(0.7)), {-0.092838876666666652442, -0.22946863333333333038}, 1e-13);
}

TEST_CASE("jacobi falls back when the recurrence degenerates") {
  // a + b = -3 makes the k = 3 leading coefficient vanish
  const double a = -1.5, b = -1.5, x = 0.3;
  const cplx direct = jacobi(3, cplx(a), cplx(b), cplx(x));
  // explicit 2F1 form (a+1)_n/n! 2F1(-n, n+a+b+1; a+1; (1-x)/2)
  const cplx want = pochhammer(cplx(a + 1), 3) / 6.0 * hyp2f1(-3.0, 3 + a + b + 1, a + 1, (1 - x) / 2);
  check_close(direct, want, 1e-13);
}

TEST_CASE("hyp2f1 values") {
  CHECK(hyp2f1(0.3, 1.2, 2.5, 0.0) == cplx(1.0));
  check_close(hyp2f1(-1.0, 1.7, 2.3, 0.6), 1.0 - 1.7 / 2.3 * 0.6, 1e-15);
  check_close(hyp2f1(1.0, 1.0, 2.0, 0.5), 2 * std::log(2.0), 1e-14);
  struct Case {
    cplx a, b, c, z, want;
  };
  const Case cases[] = {
      {0.3, 1.7, 2.2, 0.8, 1.3900118985700563285},
      {0.3, 1.7, 2.2, 0.95, 1.7166665234494448863},
      {1.5, -0.4, 0.7, -0.9, 1.5779688058153192391},
      {{0.5, 0.2}, 1.1, 2.6, {0.7, 0.5}, {1.0402711439188901849, 0.24342014600462946023}},
      {2.0, 3.0, 4.5, 0.6, 3.1175862052078353754},
  };
  for (const auto& c : cases) check_close(hyp2f1(c.a, c.b, c.c, c.z), c.want, 1e-12);
  CHECK_THROWS_AS(hyp2f1(0.5, 0.5, 1.5, 1.2), Error);
}

TEST_CASE("hyp3f2_unit") {
  CHECK(hyp3f2_unit(0, 1.3, 2.1, 0.7, 4.0) == cplx(1.0));
  const cplx b(0.4, 0.1), c(1.3), d(2.2, -0.5), e(0.9);
  check_close(hyp3f2_unit(1, b, c, d, e), 1.0 - b * c / (d * e), 1e-15);
  CHECK_THROWS_AS(hyp3f2_unit(3, 1.0, 1.0, -1.0, 2.0), Error);

  // exact rational oracle over small integers and half-integers
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> half(-9, 9);
  int done = 0;
  while (done < 200) {
    const int n = done % 6;
    const int hb = half(rng), hc = half(rng), hd = half(rng), he = half(rng);
    bool pole = false;
    for (int k = 0; k < n; ++k)
      if (hd + 2 * k == 0 || he + 2 * k == 0) pole = true;
    if (pole) continue;
    ++done;
    const Frac want = rational_3f2(n, Frac(hb, 2), Frac(hc, 2), Frac(hd, 2), Frac(he, 2));
    const cplx got = hyp3f2_unit(n, hb / 2.0, hc / 2.0, hd / 2.0, he / 2.0);
    CHECK(std::abs(got.real() - want.value()) <= 1e-12 * std::max(1.0, std::abs(want.value())));
    CHECK(got.imag() == 0.0);
  }
}

TEST_CASE("hahn polynomials") {
  CHECK(std::abs(hahn(0, 0.5, 1.5, 2.3, 4.4) - 1.0) < 1e-15);
  // n = 1 hand expansion: -(N-1)(beta+1) [1 - (alpha+beta+2)(-x)/((beta+1)(1-N))]
  const double al = 0.7, be = 1.9, x = 2.4, N = 5.3;
  const double want1 = -(N - 1) * (be + 1) * (1 + (al + be + 2) * x / ((be + 1) * (1 - N)));
  check_close(hahn(1, al, be, x, N), want1, 1e-14);
  // n = 2 against direct 3F2 assembly with Gamma ratios
  const double g = std::exp(log_gamma(N) - log_gamma(N - 2) + log_gamma(be + 3) - log_gamma(be + 1)) / 2;
  check_close(hahn(2, al, be, x, N), g * hyp3f2_unit(2, al + be + 3, -x, be + 1, 1 - N), 1e-13);
  check_close(hahn(2, 1.5, -7, 7, 5.5), 8.75, 1e-13);
  check_close(hahn(3, 0.5, 2.5, 1.2, 6.3), 251.15343749999998622, 1e-13);
}

TEST_CASE("integrate") {
  QuadratureSpec half{Rule::tanh_sinh, 6, 0.0, kInf, Transform::exp_map};
  CHECK(integrate([](double x) { return std::exp(-x); }, half).value == Approx(1.0).epsilon(1e-13));
  CHECK(integrate([](double t) { return std::sinh(t) / std::pow(std::cosh(t), 3); }, half).value ==
        Approx(0.5).epsilon(1e-13));
  QuadratureSpec fin{Rule::gauss_legendre, 3, -1.0, 1.0, Transform::none};
  auto p2 = [](double x) { return (3 * x * x - 1) / 2; };
  auto p3 = [](double x) { return (5 * x * x * x - 3 * x) / 2; };
  CHECK(std::abs(integrate([&](double x) { return p2(x) * p3(x); }, fin).value) < 1e-15);

  QuadratureSpec alg{Rule::tanh_sinh, 7, 0.0, kInf, Transform::algebraic_map};
  CHECK(integrate([](double x) { return 1 / (1 + x * x); }, alg).value == Approx(kPi / 2).epsilon(1e-12));
  QuadratureSpec line{Rule::tanh_sinh, 6, -kInf, kInf, Transform::exp_map};
  CHECK(integrate([](double x) { return std::exp(-x * x); }, line).value == Approx(std::sqrt(kPi)).epsilon(1e-13));
  QuadratureSpec gl_half{Rule::gauss_legendre, 6, 0.0, kInf, Transform::exp_map};
  CHECK(integrate([](double x) { return std::exp(-x); }, gl_half).value == Approx(1.0).epsilon(1e-13));

  CHECK_THROWS_AS(integrate([](double) { return NAN; }, fin), Error);
  QuadratureSpec bad{Rule::tanh_sinh, 6, 0.0, kInf, Transform::none};
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, bad), Error);
}

TEST_CASE("integrate reproduces the sinh-cosh beta integral") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ua(-0.9, 3.0), ugap(0.2, 4.0);
  for (int i = 0; i < 20; ++i) {
    const double a = ua(rng), b = a + ugap(rng);
    QuadratureSpec s{Rule::tanh_sinh, 6, 0.0, kInf, Transform::exp_map};
    auto f = [&](double t) { return std::pow(std::sinh(t), a) * std::exp(-b * std::log(std::cosh(t))); };
    const double want =
        0.5 * std::exp(log_gamma((1 + a) / 2) + log_gamma((b - a) / 2) - log_gamma((1 + b) / 2));
    const auto r = integrate_to(f, s, 1e-12);
    CHECK(std::abs(r.value - want) <= 1e-8 * want);
  }
}
