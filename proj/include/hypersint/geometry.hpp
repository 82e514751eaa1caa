#pragma once

#include <array>
#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hypersint {

using cplx = std::complex<double>;

struct AmbientPoint {
  double w0 = 1.0, w1 = 0.0, w2 = 0.0;
};

enum class Chart { equidistant, horicyclic, elliptic_parabolic, hyperbolic_parabolic, semi_hyperbolic };

const char* to_string(Chart c);
Chart chart_from_string(const std::string& s);

// e1 = a + i b = conj(e2), e3 real.
struct SemiHyperbolicParams {
  double a = 0.0, b = 1.0, e3 = 0.0;
  cplx e1() const { return {a, b}; }
  cplx e2() const { return {a, -b}; }
};

// Semi-hyperbolic: u1 = mu, u2 = nu with nu < e3 < mu; lower_sheet selects w2 < 0.
struct ChartPoint {
  Chart chart = Chart::equidistant;
  double u1 = 0.0, u2 = 0.0;
  std::optional<SemiHyperbolicParams> chart_params;
  bool lower_sheet = false;
};

AmbientPoint chart_to_ambient(const ChartPoint& p);
ChartPoint ambient_to_chart(const AmbientPoint& q, Chart chart,
                            std::optional<SemiHyperbolicParams> params = std::nullopt);
bool in_chart_domain(const ChartPoint& p);

double hyperboloid_residual(const AmbientPoint& q);

// Squared Jacobi coordinates s_l^2 of the semi-hyperbolic system at q.
std::array<cplx, 3> semi_hyperbolic_squares(const AmbientPoint& q);

enum class Generator { K2, K3, M1 };
const char* to_string(Generator g);

AmbientPoint generator_flow(Generator g, double t, const AmbientPoint& q);

using ScalarField = std::function<cplx(const AmbientPoint&)>;
using RealField = std::function<double(const AmbientPoint&)>;

struct DiffOptions {
  double h = 1e-2;
  int richardson = 2;
};

double apply_generator(Generator g, const RealField& f, const AmbientPoint& q, double h,
                       int richardson = 1);

using Coefficient = std::function<cplx(const AmbientPoint&)>;

struct OperatorTerm {
  Coefficient coef;
  std::vector<Generator> word;  // applied right to left
};

struct OperatorExpr {
  std::vector<OperatorTerm> terms;
  cplx constant_term = 0.0;
  // Smallest coefficient denominator magnitude at q; points with guard < 1e-8
  // are rejected.
  std::function<double(const AmbientPoint&)> guard;
  std::string name;

  OperatorExpr& add(Coefficient c, std::vector<Generator> word);
  OperatorExpr& add(cplx c, std::vector<Generator> word);
  OperatorExpr& add_multiplier(Coefficient c);
};

OperatorExpr operator+(const OperatorExpr& a, const OperatorExpr& b);
OperatorExpr operator-(const OperatorExpr& a, const OperatorExpr& b);
OperatorExpr operator*(cplx s, const OperatorExpr& a);
OperatorExpr operator+(const OperatorExpr& a, cplx c);

// Nested central differences of f along a word, with Richardson extrapolation.
cplx apply_word(const std::vector<Generator>& word, const ScalarField& f, const AmbientPoint& q,
                const DiffOptions& opt);
cplx apply_operator(const OperatorExpr& expr, const ScalarField& f, const AmbientPoint& q,
                    const DiffOptions& opt = {});

OperatorExpr laplace_beltrami();

}  // namespace hypersint
