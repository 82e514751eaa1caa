#include "hypersint/geometry.hpp"

#include <cmath>
#include <numbers>

#include "hypersint/error.hpp"

namespace hypersint {

const char* to_string(Chart c) {
  switch (c) {
    case Chart::equidistant: return "equidistant";
    case Chart::horicyclic: return "horicyclic";
    case Chart::elliptic_parabolic: return "elliptic-parabolic";
    case Chart::hyperbolic_parabolic: return "hyperbolic-parabolic";
    case Chart::semi_hyperbolic: return "semi-hyperbolic";
  }
  return "?";
}

Chart chart_from_string(const std::string& s) {
  for (Chart c : {Chart::equidistant, Chart::horicyclic, Chart::elliptic_parabolic,
                  Chart::hyperbolic_parabolic, Chart::semi_hyperbolic})
    if (s == to_string(c)) return c;
  throw Error(ErrorKind::invalid_argument, "unknown chart '" + s + "'");
}

const char* to_string(Generator g) {
  switch (g) {
    case Generator::K2: return "K2";
    case Generator::K3: return "K3";
    case Generator::M1: return "M1";
  }
  return "?";
}

bool in_chart_domain(const ChartPoint& p) {
  if (!std::isfinite(p.u1) || !std::isfinite(p.u2)) return false;
  constexpr double hp = std::numbers::pi / 2;
  switch (p.chart) {
    case Chart::equidistant: return true;
    case Chart::horicyclic: return p.u2 > 0;
    case Chart::elliptic_parabolic: return p.u1 > 0 && std::abs(p.u2) < hp;
    case Chart::hyperbolic_parabolic: return p.u1 > 0 && p.u2 > 0 && p.u2 < hp;
    case Chart::semi_hyperbolic:
      return p.chart_params && p.chart_params->b != 0 && p.u2 < p.chart_params->e3 &&
             p.chart_params->e3 < p.u1;
  }
  return false;
}

AmbientPoint chart_to_ambient(const ChartPoint& p) {
  if (!in_chart_domain(p))
    throw Error(ErrorKind::domain, std::string("point outside the ") + to_string(p.chart) + " chart");
  const double u = p.u1, v = p.u2;
  switch (p.chart) {
    case Chart::equidistant:
      return {std::cosh(u) * std::cosh(v), std::cosh(u) * std::sinh(v), std::sinh(u)};
    case Chart::horicyclic: {
      const double r = u * u + v * v;
      return {(r + 1) / (2 * v), (r - 1) / (2 * v), u / v};
    }
    case Chart::elliptic_parabolic: {
      const double ca = std::cosh(u), ct = std::cos(v), sa = std::sinh(u), st = std::sin(v);
      return {(ca * ca + ct * ct) / (2 * ca * ct), (sa * sa - st * st) / (2 * ca * ct),
              std::tanh(u) * std::tan(v)};
    }
    case Chart::hyperbolic_parabolic: {
      const double cb = std::cosh(u), ct = std::cos(v), sb = std::sinh(u), st = std::sin(v);
      return {(cb * cb + ct * ct) / (2 * sb * st), (sb * sb - st * st) / (2 * sb * st),
              cb * ct / (sb * st)};
    }
    case Chart::semi_hyperbolic: {
      const auto& cp = *p.chart_params;
      const cplx e1 = cp.e1(), e2 = cp.e2(), e3 = cp.e3;
      const cplx s1sq = (u - e1) * (v - e1) / ((e1 - e2) * (e1 - e3));
      const cplx s1 = std::sqrt(2.0 * s1sq);
      const double s3sq = ((u - cp.e3) * (v - cp.e3)) / std::norm(e3 - e1);
      const double w2 = std::sqrt(-s3sq);
      return {s1.real(), s1.imag(), p.lower_sheet ? -w2 : w2};
    }
  }
  return {};
}

std::array<cplx, 3> semi_hyperbolic_squares(const AmbientPoint& q) {
  const cplx z(q.w0, q.w1);
  return {z * z / 2.0, std::conj(z) * std::conj(z) / 2.0, cplx(-q.w2 * q.w2)};
}

ChartPoint ambient_to_chart(const AmbientPoint& q, Chart chart,
                            std::optional<SemiHyperbolicParams> params) {
  ChartPoint p;
  p.chart = chart;
  switch (chart) {
    case Chart::equidistant:
      p.u1 = std::asinh(q.w2);
      p.u2 = std::atanh(q.w1 / q.w0);
      break;
    case Chart::horicyclic: {
      const double d = q.w0 - q.w1;
      p.u1 = q.w2 / d;
      p.u2 = 1.0 / d;
      break;
    }
    case Chart::elliptic_parabolic: {
      const double d = q.w0 - q.w1;
      const double S = 1.0 + (q.w0 + q.w1) / d, P = 1.0 / (d * d);
      const double X = (S + std::sqrt(std::max(0.0, S * S - 4 * P))) / 2;
      const double Y = P / X;
      p.u1 = std::acosh(std::sqrt(X));
      p.u2 = std::acos(std::min(1.0, std::sqrt(Y)));
      if (q.w2 < 0) p.u2 = -p.u2;
      break;
    }
    case Chart::hyperbolic_parabolic: {
      const double d = q.w0 - q.w1;
      const double D = (q.w0 + q.w1) / d - 1.0, P = 1.0 / (d * d);
      const double X = (D + std::sqrt(D * D + 4 * P)) / 2;
      const double Y = P / X;
      p.u1 = std::asinh(std::sqrt(X));
      p.u2 = std::asin(std::min(1.0, std::sqrt(Y)));
      break;
    }
    case Chart::semi_hyperbolic: {
      if (!params) throw Error(ErrorKind::invalid_argument, "semi-hyperbolic chart needs chart_params");
      const auto s = semi_hyperbolic_squares(q);
      const cplx e[3] = {params->e1(), params->e2(), cplx(params->e3)};
      cplx T = 0, Q = 0;
      for (int l = 0; l < 3; ++l) {
        const cplx ea = e[(l + 1) % 3], eb = e[(l + 2) % 3];
        T += s[l] * (ea + eb);
        Q += s[l] * ea * eb;
      }
      const cplx disc = std::sqrt(T * T - 4.0 * Q);
      const double r1 = ((T + disc) / 2.0).real(), r2 = ((T - disc) / 2.0).real();
      p.u1 = std::max(r1, r2);
      p.u2 = std::min(r1, r2);
      p.chart_params = params;
      p.lower_sheet = q.w2 < 0;
      break;
    }
  }
  return p;
}

double hyperboloid_residual(const AmbientPoint& q) {
  return std::abs(q.w0 * q.w0 - q.w1 * q.w1 - q.w2 * q.w2 - 1.0);
}

AmbientPoint generator_flow(Generator g, double t, const AmbientPoint& q) {
  switch (g) {
    case Generator::K3: {
      const double c = std::cosh(t), s = std::sinh(t);
      return {q.w0 * c + q.w1 * s, q.w1 * c + q.w0 * s, q.w2};
    }
    case Generator::K2: {
      const double c = std::cosh(t), s = std::sinh(t);
      return {q.w0 * c + q.w2 * s, q.w1, q.w2 * c + q.w0 * s};
    }
    case Generator::M1: {
      const double c = std::cos(t), s = std::sin(t);
      return {q.w0, q.w1 * c - q.w2 * s, q.w2 * c + q.w1 * s};
    }
  }
  return q;
}

namespace {

cplx word_at_step(const Generator* w, std::size_t len, const ScalarField& f, const AmbientPoint& q,
                  double h) {
  if (len == 0) {
    const cplx v = f(q);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw Error(ErrorKind::nonfinite, "field evaluation is not finite");
    return v;
  }
  const cplx fp = word_at_step(w + 1, len - 1, f, generator_flow(w[0], h, q), h);
  const cplx fm = word_at_step(w + 1, len - 1, f, generator_flow(w[0], -h, q), h);
  return (fp - fm) / (2 * h);
}

}  // namespace

cplx apply_word(const std::vector<Generator>& word, const ScalarField& f, const AmbientPoint& q,
                const DiffOptions& opt) {
  if (word.size() > 3) throw Error(ErrorKind::invalid_argument, "operator words are limited to length 3");
  if (word.empty()) return f(q);
  if (!(opt.h > 0)) throw Error(ErrorKind::invalid_argument, "differentiation step must be positive");
  const int levels = std::max(0, opt.richardson);
  std::vector<cplx> tab(levels + 1);
  double h = opt.h;
  for (int i = 0; i <= levels; ++i, h /= 2) tab[i] = word_at_step(word.data(), word.size(), f, q, h);
  // Richardson table; the nested central stencil has an even error expansion.
  double fac = 4.0;
  for (int j = 1; j <= levels; ++j, fac *= 4.0)
    for (int i = levels; i >= j; --i) tab[i] = (fac * tab[i] - tab[i - 1]) / (fac - 1.0);
  return tab[levels];
}

double apply_generator(Generator g, const RealField& f, const AmbientPoint& q, double h,
                       int richardson) {
  const ScalarField cf = [&f](const AmbientPoint& p) { return cplx(f(p)); };
  return apply_word({g}, cf, q, {h, richardson}).real();
}

OperatorExpr& OperatorExpr::add(Coefficient c, std::vector<Generator> word) {
  if (word.size() > 3) throw Error(ErrorKind::invalid_argument, "operator words are limited to length 3");
  terms.push_back({std::move(c), std::move(word)});
  return *this;
}

OperatorExpr& OperatorExpr::add(cplx c, std::vector<Generator> word) {
  return add([c](const AmbientPoint&) { return c; }, std::move(word));
}

OperatorExpr& OperatorExpr::add_multiplier(Coefficient c) { return add(std::move(c), {}); }

namespace {

std::function<double(const AmbientPoint&)> min_guard(const OperatorExpr& a, const OperatorExpr& b) {
  if (!a.guard) return b.guard;
  if (!b.guard) return a.guard;
  return [ga = a.guard, gb = b.guard](const AmbientPoint& q) { return std::min(ga(q), gb(q)); };
}

}  // namespace

OperatorExpr operator+(const OperatorExpr& a, const OperatorExpr& b) {
  OperatorExpr r = a;
  r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
  r.constant_term += b.constant_term;
  r.guard = min_guard(a, b);
  return r;
}

OperatorExpr operator*(cplx s, const OperatorExpr& a) {
  OperatorExpr r = a;
  for (auto& t : r.terms) t.coef = [s, c = t.coef](const AmbientPoint& q) { return s * c(q); };
  r.constant_term *= s;
  return r;
}

OperatorExpr operator-(const OperatorExpr& a, const OperatorExpr& b) { return a + (-1.0) * b; }

OperatorExpr operator+(const OperatorExpr& a, cplx c) {
  OperatorExpr r = a;
  r.constant_term += c;
  return r;
}

cplx apply_operator(const OperatorExpr& expr, const ScalarField& f, const AmbientPoint& q,
                    const DiffOptions& opt) {
  if (expr.guard && expr.guard(q) < 1e-8)
    throw Error(ErrorKind::singular_configuration, "operator coefficient singular at evaluation point");
  cplx sum = expr.constant_term * f(q);
  for (const auto& t : expr.terms) {
    const cplx c = t.coef(q);
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw Error(ErrorKind::singular_configuration, "operator coefficient not finite");
    if (c == 0.0) continue;
    sum += c * apply_word(t.word, f, q, opt);
  }
  return sum;
}

OperatorExpr laplace_beltrami() {
  OperatorExpr lb;
  lb.name = "LB";
  lb.add(1.0, {Generator::K3, Generator::K3})
      .add(1.0, {Generator::K2, Generator::K2})
      .add(-1.0, {Generator::M1, Generator::M1});
  return lb;
}

}  // namespace hypersint
