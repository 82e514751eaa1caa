#include "hypersint/bethe.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>

#include "hypersint/error.hpp"

namespace hypersint {

std::vector<cplx> stieltjes_residual(const StieltjesSystem& sys, const std::vector<cplx>& t) {
  const std::size_t n = t.size();
  std::vector<cplx> f(n, sys.linear);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k)
      if (k != i) f[i] += 2.0 / (t[i] - t[k]);
    for (std::size_t l = 0; l < sys.poles.size(); ++l) f[i] += sys.weights[l] / (t[i] - sys.poles[l]);
  }
  return f;
}

std::uint64_t env_seed() {
  const char* s = std::getenv("HYPERSINT_SEED");
  if (!s || !*s) return 0;
  return std::strtoull(s, nullptr, 10);
}

std::vector<int> count_in_zones(const std::vector<cplx>& roots, const std::vector<Zone>& zones,
                                bool* all_inside) {
  std::vector<int> counts(zones.size(), 0);
  bool inside = true;
  for (const cplx& r : roots) {
    bool hit = false;
    if (std::abs(r.imag()) <= 1e-9 * std::max(1.0, std::abs(r.real()))) {
      for (std::size_t z = 0; z < zones.size(); ++z)
        if (zones[z].contains(r.real())) {
          ++counts[z];
          hit = true;
          break;
        }
    }
    inside = inside && hit;
  }
  if (all_inside) *all_inside = inside;
  return counts;
}

namespace {

constexpr double kInfGapValue = 1e300;
using VecC = Eigen::VectorXcd;
using MatC = Eigen::MatrixXcd;

double scaled_norm(const StieltjesSystem& sys, const std::vector<cplx>& t) {
  const auto f = stieltjes_residual(sys, t);
  double m = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    // scale by the distance to the nearest singularity so large and small roots weigh alike
    double d = kInfGapValue;
    for (const cplx& e : sys.poles) d = std::min(d, std::abs(t[i] - e));
    for (std::size_t k = 0; k < t.size(); ++k)
      if (k != i) d = std::min(d, std::abs(t[i] - t[k]));
    if (d == kInfGapValue) d = 1.0;
    m = std::max(m, std::abs(f[i]) * d);
  }
  return m;
}

bool finite(const std::vector<cplx>& t) {
  for (const cplx& x : t)
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
  return true;
}

bool newton(const StieltjesSystem& sys, std::vector<cplx>& t, const RootSearch& opt) {
  const int n = int(t.size());
  double fn = scaled_norm(sys, t);
  for (int it = 0; it < opt.max_iter; ++it) {
    if (!finite(t)) return false;
    if (fn <= opt.tol) return true;
    const auto f = stieltjes_residual(sys, t);
    MatC J = MatC::Zero(n, n);
    VecC F(n);
    for (int i = 0; i < n; ++i) {
      F(i) = f[i];
      cplx diag = 0.0;
      for (int k = 0; k < n; ++k) {
        if (k == i) continue;
        const cplx d = t[i] - t[k];
        const cplx v = 2.0 / (d * d);
        J(i, k) = v;
        diag -= v;
      }
      for (std::size_t l = 0; l < sys.poles.size(); ++l) {
        const cplx d = t[i] - sys.poles[l];
        diag -= sys.weights[l] / (d * d);
      }
      J(i, i) = diag;
    }
    const VecC step = J.fullPivLu().solve(F);
    if (!step.allFinite()) return false;
    // limit the step so that no root jumps across half the gap to its nearest singularity
    double lim = 1.0;
    for (int i = 0; i < n; ++i) {
      double gap = kInfGapValue;
      for (const cplx& e : sys.poles) gap = std::min(gap, std::abs(t[i] - e));
      for (int k = 0; k < n; ++k)
        if (k != i) gap = std::min(gap, std::abs(t[i] - t[k]) / 2);
      const double s = std::abs(step(i));
      if (s > 0.9 * gap + 1e-300 && gap < kInfGapValue) lim = std::min(lim, 0.9 * gap / s);
    }
    double lam = lim;
    bool accepted = false;
    for (int bt = 0; bt < 40; ++bt, lam /= 2) {
      std::vector<cplx> trial(t);
      for (int i = 0; i < n; ++i) trial[i] -= lam * step(i);
      if (!finite(trial)) continue;
      const double tn = scaled_norm(sys, trial);
      if (tn < fn || bt == 39) {
        t = trial;
        fn = tn;
        accepted = true;
        break;
      }
    }
    if (!accepted) return false;
  }
  return fn <= opt.tol;
}

void splits(int n, int zones, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (int(cur.size()) == zones - 1) {
    int used = 0;
    for (int c : cur) used += c;
    cur.push_back(n - used);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  int used = 0;
  for (int c : cur) used += c;
  for (int c = 0; c <= n - used; ++c) {
    cur.push_back(c);
    splits(n, zones, cur, out);
    cur.pop_back();
  }
}

// cnt points strictly inside the zone; scale controls how far points go on infinite zones
std::vector<double> zone_points(const Zone& z, int cnt, double scale) {
  std::vector<double> p;
  const bool lo_inf = std::isinf(z.lo), hi_inf = std::isinf(z.hi);
  for (int j = 0; j < cnt; ++j) {
    const double f = (j + 0.5) / cnt;
    if (!lo_inf && !hi_inf)
      p.push_back(z.lo + (z.hi - z.lo) * (0.5 - 0.5 * std::cos(std::numbers::pi * f)));
    else if (!lo_inf)
      p.push_back(z.lo + scale * (j + 0.5));
    else if (!hi_inf)
      p.push_back(z.hi - scale * (j + 0.5));
    else
      p.push_back(scale * (j - 0.5 * (cnt - 1)));
  }
  return p;
}

// real part first, with a tolerance so conjugate pairs order by imaginary part
bool root_less(cplx a, cplx b) {
  if (std::abs(a.real() - b.real()) > 1e-9 * std::max(1.0, std::abs(a.real()))) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

std::vector<std::vector<cplx>> solve_stieltjes(const StieltjesSystem& sys, int n, const RootSearch& opt) {
  if (n < 0) throw Error(ErrorKind::invalid_argument, "negative root count");
  if (sys.poles.size() != sys.weights.size())
    throw Error(ErrorKind::invalid_argument, "poles and weights differ in length");
  if (n == 0) return {{}};

  std::vector<std::vector<cplx>> starts;
  const double scales[] = {0.25, 1.0, 3.0, 10.0};
  if (!opt.zones.empty()) {
    std::vector<std::vector<int>> sp;
    std::vector<int> cur;
    splits(n, int(opt.zones.size()), cur, sp);
    for (const auto& s : sp)
      for (double sc : scales) {
        std::vector<cplx> st;
        for (std::size_t z = 0; z < s.size(); ++z)
          for (double x : zone_points(opt.zones[z], s[z], sc)) st.push_back(x);
        starts.push_back(st);
      }
  }
  std::mt19937_64 rng(opt.seed);
  if (opt.generic_seeds) {
    std::vector<double> grid;
    for (double v : {0.1, 0.3, 0.7, 1.5, 3.0, 6.0, 12.0, 25.0}) {
      grid.push_back(v);
      grid.push_back(-v);
    }
    std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
    std::normal_distribution<double> jitter(0.0, 0.05);
    for (int r = 0; r < opt.random_starts; ++r) {
      std::vector<cplx> st;
      for (int i = 0; i < n; ++i) {
        cplx x = grid[pick(rng)] * (1.0 + jitter(rng)) + 1e-3 * i;
        if (opt.complex_seeds) x += cplx(0.0, grid[pick(rng)] * (1.0 + jitter(rng)));
        st.push_back(x);
      }
      starts.push_back(st);
    }
  }
  for (auto& st : starts) {
    // keep initial roots distinct from each other and from the poles
    for (std::size_t i = 0; i < st.size(); ++i) {
      for (std::size_t k = 0; k < i; ++k)
        if (std::abs(st[i] - st[k]) < 1e-6) st[i] += 1e-3 * double(i + 1);
      for (const cplx& e : sys.poles)
        if (std::abs(st[i] - e) < 1e-6) st[i] += 1e-3;
    }
  }

  std::vector<std::vector<cplx>> found;
  for (auto t : starts) {
    if (!newton(sys, t, opt)) continue;
    std::sort(t.begin(), t.end(), root_less);
    bool distinct = true;
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t k = 0; k < i; ++k)
        if (std::abs(t[i] - t[k]) < 1e-8 * std::max(1.0, std::abs(t[i]))) distinct = false;
    if (!distinct) continue;
    bool dup = false;
    for (const auto& g : found) {
      // greedy matching, the configurations are unordered sets
      std::vector<bool> used(g.size(), false);
      bool same = true;
      for (const cplx& x : t) {
        std::size_t best = g.size();
        double bd = kInfGapValue;
        for (std::size_t i = 0; i < g.size(); ++i)
          if (!used[i] && std::abs(x - g[i]) < bd) bd = std::abs(x - g[i]), best = i;
        used[best] = true;
        if (bd > 1e-7 * std::max(1.0, std::abs(x))) same = false;
      }
      if (same) dup = true;
    }
    if (!dup) found.push_back(t);
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (root_less(a[i], b[i])) return true;
      if (root_less(b[i], a[i])) return false;
    }
    return false;
  });
  return found;
}

}  // namespace hypersint
