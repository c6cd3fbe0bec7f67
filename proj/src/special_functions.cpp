// Univariate distribution functions: standard normal and Student t, with
// quantiles.  The normal cdf goes through erfc; the t cdf through the
// regularized incomplete beta (continued fraction), with closed forms for
// nu = 1 and nu = 2.  Quantiles are rational approximations or asymptotic
// guesses polished by bracketed Newton steps.

#include "qdc/special_functions.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qdc/errors.hpp"

namespace qdc {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kInvSqrt2Pi = 0.3989422804014327;
constexpr double kPi = 3.141592653589793;

// Continued fraction for the incomplete beta (modified Lentz).
double beta_cf(double a, double b, double x) {
  const double fpmin = 1e-300;
  const double eps = 1e-15;
  const int max_iter = 500;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < fpmin) d = fpmin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= max_iter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < fpmin) d = fpmin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < fpmin) d = fpmin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < eps) return h;
  }
  throw QuadratureError("incomplete_beta continued fraction did not converge");
}

// Acklam's rational approximation to the normal quantile, ~1e-9 accurate.
double normal_quantile_approx(double p) {
  static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                              -2.759285104469687e+02, 1.383577518672690e+02,
                              -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                              -1.556989798598866e+02, 6.680131188771972e+01,
                              -1.328068155288572e+01};
  static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                              -2.400758277161838e+00, -2.549732539343734e+00,
                              4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                              2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;

  if (p < plow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - plow) {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

void require_prob_open(double p, const char* what) {
  if (std::isnan(p) || p <= 0.0 || p >= 1.0) {
    throw DomainError(std::string(what) + ": p must lie in (0,1), got " + std::to_string(p));
  }
}

}  // namespace

double std_normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double std_normal_quantile(double p) {
  require_prob_open(p, "std_normal_quantile");
  double x = normal_quantile_approx(p);
  // Halley refinement against the erfc-based cdf.
  for (int i = 0; i < 2; ++i) {
    const double e = std_normal_cdf(x) - p;
    const double u = e / std_normal_pdf(x);
    if (!std::isfinite(u)) break;
    x -= u / (1.0 + 0.5 * x * u);
  }
  return x;
}

double incomplete_beta(double a, double b, double x) {
  if (std::isnan(x) || x < 0.0 || x > 1.0) {
    throw DomainError("incomplete_beta: x outside [0,1]");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double lbeta = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b);
  const double bt = std::exp(lbeta + a * std::log(x) + b * std::log1p(-x));
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return bt * beta_cf(a, b, x) / a;
  }
  return 1.0 - bt * beta_cf(b, a, 1.0 - x) / b;
}

double student_t_pdf(double x, double nu) {
  if (nu <= 0.0) throw DomainError("student_t_pdf: nu must be positive");
  const double lc = std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu) -
                    0.5 * std::log(nu * kPi);
  return std::exp(lc - 0.5 * (nu + 1.0) * std::log1p(x * x / nu));
}

double student_t_cdf(double x, double nu) {
  if (nu <= 0.0) throw DomainError("student_t_cdf: nu must be positive");
  if (std::isnan(x)) throw DomainError("student_t_cdf: NaN argument");
  if (x == 0.0) return 0.5;
  if (std::isinf(x)) return x > 0.0 ? 1.0 : 0.0;
  if (nu == 1.0) return 0.5 + std::atan(x) / kPi;
  if (nu == 2.0) return 0.5 + 0.5 * x / std::sqrt(2.0 + x * x);
  // w = nu/(nu+x^2), written to avoid overflow in x*x for huge |x|.
  double w;
  if (std::fabs(x) > 1e150) {
    const double r = std::sqrt(nu) / std::fabs(x);
    w = r * r / (1.0 + r * r);
  } else {
    w = nu / (nu + x * x);
  }
  const double half_tail = 0.5 * incomplete_beta(0.5 * nu, 0.5, w);
  return x < 0.0 ? half_tail : 1.0 - half_tail;
}

double student_t_quantile(double p, double nu) {
  require_prob_open(p, "student_t_quantile");
  if (nu <= 0.0) throw DomainError("student_t_quantile: nu must be positive");
  if (p == 0.5) return 0.0;
  if (nu == 1.0) return std::tan(kPi * (p - 0.5));
  if (nu == 2.0) {
    const double s = 2.0 * p - 1.0;
    return s * kSqrt2 / std::sqrt(4.0 * p * (1.0 - p));
  }

  const bool upper = p > 0.5;
  const double q = upper ? 1.0 - p : p;  // q in (0, 1/2]

  double x;
  if (q > 1e-4) {
    // Cornish-Fisher style expansion around the normal quantile.
    const double z = std_normal_quantile(q);
    const double z2 = z * z;
    x = z + z * (z2 + 1.0) / (4.0 * nu) +
        z * (5.0 * z2 * z2 + 16.0 * z2 + 3.0) / (96.0 * nu * nu);
  } else {
    // Tail: T_nu(x) ~ A * nu^{(nu-1)/2} |x|^{-nu} for x -> -inf.
    const double la = std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu) -
                      0.5 * std::log(nu * kPi);
    const double lx = (la + 0.5 * (nu - 1.0) * std::log(nu) - std::log(nu * q) +
                       std::log(nu)) / nu;
    x = -std::exp(lx);
  }

  // Bracketed Newton on the cdf.
  double lo = -std::numeric_limits<double>::max();
  double hi = 0.0;
  for (int i = 0; i < 80; ++i) {
    const double f = student_t_cdf(x, nu) - q;
    if (f > 0.0) {
      hi = std::min(hi, x);
    } else {
      lo = std::max(lo, x);
    }
    const double dens = student_t_pdf(x, nu);
    double step = dens > 0.0 ? f / dens : 0.0;
    double xn = x - step;
    if (!(xn > lo && xn < hi)) xn = 0.5 * (std::max(lo, 2.0 * x) + hi);  // bisect-ish
    if (std::fabs(xn - x) <= 1e-14 * (1.0 + std::fabs(x))) {
      x = xn;
      break;
    }
    x = xn;
  }
  return upper ? -x : x;
}

}  // namespace qdc
