// Copula of the pair X ~ N(0,1), Y | X=x ~ N(beta0 + beta1 x, x^2).
//
// With W = beta1 + Z, Z ~ N(0,1) independent of X, Y - beta0 = X W, so the
// marginal cdf of Y - beta0 is
//   G(y) = int_0^inf phi(x) [Phi((y - b1 x)/x) + Phi((y + b1 x)/x)] dx,
// symmetric about zero.  The copula cdf integrates the conditional
//   C_{2|1}(v|w) = Phi((G^{-1}(v) - b1 s)/|s|),  s = Phi^{-1}(w),
// whose integrand jumps across w = 1/2; the quadrature is split there and
// around the boundary layer |s| ~ |G^{-1}(v)|.
//
// G has infinite slope at 0 (log-divergent density), so the tabulated
// interpolant cannot resolve G^{-1}(1/2 + t) for small t; inverse values
// used by the cdf are therefore polished against the exact quadrature G.

#include <algorithm>
#include <cmath>
#include <memory>
#include <vector>

#include "qdc/errors.hpp"
#include "qdc/families.hpp"
#include "qdc/quadrature.hpp"
#include "qdc/special_functions.hpp"

namespace qdc {

namespace {

constexpr double kXCut = 8.5;        // phi(x) below ~1e-16 beyond this
constexpr int kTableSize = 2001;     // spec'd tabulation grid
constexpr double kTableSpan = 8.0;   // in units of sigma_Y
constexpr double kGTol = 5e-13;

}  // namespace

RegressionModel::RegressionModel(double beta0, double beta1)
    : beta0_(beta0), beta1_(beta1), sigma_(std::sqrt(1.0 + beta1 * beta1)) {
  if (!std::isfinite(beta0) || !std::isfinite(beta1)) {
    throw DomainError("RegressionModel: betas must be finite");
  }
  // Tabulate G on a symmetric grid; G(-y) = 1 - G(y) halves the work.
  const int n = kTableSize;
  const int half = n / 2;
  std::vector<double> ys(n), gs(n);
  const double step = kTableSpan * sigma_ / half;
  for (int i = 0; i <= half; ++i) {
    const double y = i * step;
    const double g = g_exact(y);
    ys[half + i] = y;
    gs[half + i] = g;
    ys[half - i] = -y;
    gs[half - i] = 1.0 - g;
  }
  table_ = MonotoneCubic(std::move(ys), std::move(gs));
}

double RegressionModel::g_exact(double y) const {
  if (y == 0.0) return 0.5;
  if (y < 0.0) return 1.0 - g_exact(-y);
  const double b1 = beta1_;
  auto f = [y, b1](double x) {
    return std_normal_pdf(x) *
           (std_normal_cdf((y - b1 * x) / x) + std_normal_cdf((y + b1 * x) / x));
  };
  QuadratureOptions opt;
  opt.abs_tol = kGTol;
  opt.rel_tol = 1e-12;
  opt.max_panels = 8192;
  for (double m : {0.01, 0.1, 1.0, 10.0}) {
    const double p = y * m;
    if (p > 0.0 && p < kXCut) opt.breakpoints.push_back(p);
  }
  return std::min(1.0, integrate(f, 0.0, kXCut, opt));
}

double RegressionModel::g_cdf(double y) const { return table_(y); }

double RegressionModel::g_inv(double v) const {
  if (std::isnan(v) || v < 0.0 || v > 1.0) throw DomainError("g_inv: v outside [0,1]");
  if (v == 0.0) return -std::numeric_limits<double>::infinity();
  if (v == 1.0) return std::numeric_limits<double>::infinity();
  if (v == 0.5) return 0.0;
  if (v < 0.5) return -g_inv(1.0 - v);

  // Bracket from the table, expanding beyond its range if needed.
  double lo = 0.0;
  double flo = 0.5;
  double hi = table_.inverse(v);
  if (hi <= lo) hi = table_.x_back();
  double fhi = g_exact(hi);
  while (fhi < v) {
    lo = hi;
    flo = fhi;
    hi = hi * 1.5 + sigma_;
    fhi = g_exact(hi);
    if (hi > 1e6) throw QuadratureError("g_inv: failed to bracket");
  }

  // Safeguarded secant on the exact quadrature cdf.
  double x = std::min(std::max(table_.inverse(v), lo), hi);
  for (int it = 0; it < 200; ++it) {
    double fx = g_exact(x) - v;
    if (std::fabs(fx) <= kGTol) return x;
    if (fx > 0.0) {
      hi = x;
      fhi = fx + v;
    } else {
      lo = x;
      flo = fx + v;
    }
    double xn = x - fx * (hi - lo) / (fhi - flo);
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
    if (hi - lo <= 1e-17 * (1.0 + std::fabs(x))) return 0.5 * (lo + hi);
    x = xn;
  }
  return x;
}

double RegressionModel::cond_2given1(double v, double u) const {
  if (v <= 0.0) return 0.0;
  if (v >= 1.0) return 1.0;
  if (u == 0.5) return v > 0.5 ? 1.0 : (v < 0.5 ? 0.0 : 0.5);
  if (u <= 0.0 || u >= 1.0) {
    throw DegenerateBoundaryError("regression conditional at u in {0,1}");
  }
  const double y = g_inv(v);
  const double s = std_normal_quantile(u);
  return std_normal_cdf((y - beta1_ * s) / std::fabs(s));
}

double RegressionModel::cdf(double u, double v) const {
  if (u <= 0.0 || v <= 0.0) return 0.0;
  if (u >= 1.0) return v;
  if (v >= 1.0) return u;
  const double y = g_inv(v);
  const double b1 = beta1_;
  auto f = [y, b1](double w) {
    const double s = std_normal_quantile(w);
    return std_normal_cdf((y - b1 * s) / std::fabs(s));
  };
  QuadratureOptions opt;
  opt.abs_tol = 1e-10;
  opt.rel_tol = 1e-12;
  opt.max_panels = 8192;
  // Split at the median singularity and around the |Phi^{-1}(w)| ~ |y| layer.
  opt.breakpoints.push_back(0.5);
  const double ay = std::fabs(y);
  for (double m : {0.2, 1.0, 5.0, 25.0}) {
    const double c = ay * m;
    if (c < 8.0) {
      opt.breakpoints.push_back(std_normal_cdf(-c));
      opt.breakpoints.push_back(std_normal_cdf(c));
    }
  }
  return integrate(f, 0.0, u, opt);
}

Copula make_regression_model(double beta0, double beta1) {
  auto model = std::make_shared<const RegressionModel>(beta0, beta1);
  Copula::Parts parts;
  parts.cdf = [model](double u, double v) { return model->cdf(u, v); };
  parts.cond_2given1 = [model](double v, double u, Side) {
    return model->cond_2given1(v, u);
  };
  // No analytic C_{1|2}: the facade routes this family through the volume
  // method rather than the conditional one.
  parts.sampler = [model](Rng& rng) {
    const double x = rng.normal();
    const double z = rng.normal();
    const double y = model->beta1() * x + x * z;  // Y - beta0
    double u = std_normal_cdf(x);
    double v = model->g_cdf(y);
    return std::make_pair(clamp01(u), clamp01(v));
  };
  parts.label = "regression(beta0=" + std::to_string(beta0) +
                ",beta1=" + std::to_string(beta1) + ")";
  return Copula(std::move(parts));
}

}  // namespace qdc
