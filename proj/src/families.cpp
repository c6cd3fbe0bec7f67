// Concrete copula constructors for every family in the catalog.  Bivariate
// cdfs of the Gaussian and Student t copulas are single adaptive quadratures
// of their analytic conditional in the first argument; everything else is in
// closed form.

#include "qdc/families.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qdc/errors.hpp"
#include "qdc/quadrature.hpp"
#include "qdc/quantile_dependence.hpp"
#include "qdc/special_functions.hpp"

namespace qdc {

namespace {

constexpr double kIndicatorTol = 1e-12;

bool near(double a, double b) { return std::fabs(a - b) <= kIndicatorTol; }

// Wraps a Y|X-oriented closed form; the X|Y value follows from the boundary
// classification of (p,q).
Copula::ClosedFormFn closed_from_yx(std::function<double(double, double)> yx) {
  return [yx](double p, double q, Direction dir) -> std::optional<double> {
    double v = yx(p, q);
    if (dir == Direction::x_given_y) v = dual_direction(v, QuantilePoint::of(p, q));
    return clamp01(v);
  };
}

Copula relabel(const Copula& c, const std::string& label) {
  return c.with_label(label);
}

}  // namespace

Copula make_product() {
  Copula::Parts parts;
  parts.cdf = [](double u, double v) { return u * v; };
  parts.cond_2given1 = [](double v, double, Side) { return v; };
  parts.cond_1given2 = [](double u, double, Side) { return u; };
  parts.sampler = [](Rng& rng) {
    const double u = rng.uniform_open();
    const double v = rng.uniform_open();
    return std::make_pair(u, v);
  };
  parts.closed_form_qdc = [](double, double, Direction) -> std::optional<double> {
    return 0.0;
  };
  parts.label = "independence";
  return Copula(std::move(parts));
}

Copula make_frechet_upper() {
  Copula::Parts parts;
  parts.cdf = [](double u, double v) { return std::min(u, v); };
  parts.cond_2given1 = [](double v, double u, Side side) {
    if (side == Side::left) return u <= v ? 1.0 : 0.0;
    return u < v ? 1.0 : 0.0;
  };
  parts.cond_1given2 = [](double u, double v, Side side) {
    if (side == Side::left) return v <= u ? 1.0 : 0.0;
    return v < u ? 1.0 : 0.0;
  };
  parts.sampler = [](Rng& rng) {
    const double u = rng.uniform_open();
    return std::make_pair(u, u);
  };
  parts.closed_form_qdc = closed_from_yx([](double p, double q) {
    return near(p, q) ? 1.0 : 0.0;
  });
  parts.label = "frechet-upper";
  return Copula(std::move(parts));
}

Copula make_frechet_lower() {
  Copula::Parts parts;
  parts.cdf = [](double u, double v) { return std::max(u + v - 1.0, 0.0); };
  parts.cond_2given1 = [](double v, double u, Side side) {
    const double s = u + v;
    if (side == Side::right) return s >= 1.0 ? 1.0 : 0.0;
    return s > 1.0 ? 1.0 : 0.0;
  };
  parts.cond_1given2 = [](double u, double v, Side side) {
    const double s = u + v;
    if (side == Side::right) return s >= 1.0 ? 1.0 : 0.0;
    return s > 1.0 ? 1.0 : 0.0;
  };
  parts.sampler = [](Rng& rng) {
    const double u = rng.uniform_open();
    return std::make_pair(u, 1.0 - u);
  };
  parts.closed_form_qdc = closed_from_yx([](double p, double q) {
    return near(p + q, 1.0) ? 1.0 : 0.0;
  });
  parts.label = "frechet-lower";
  return Copula(std::move(parts));
}

// ---------------------------------------------------------------------------
// Gaussian copula

Copula make_gaussian(const GaussianParams& par) {
  const double rho = par.rho;
  if (std::isnan(rho) || std::fabs(rho) > 1.0) {
    throw DomainError("make_gaussian: rho outside [-1,1]");
  }
  if (rho == 1.0) return make_frechet_upper();
  if (rho == -1.0) return make_frechet_lower();

  const double s = std::sqrt(1.0 - rho * rho);

  auto cond21 = [rho, s](double v, double u, Side) {
    if (v <= 0.0) return 0.0;
    if (v >= 1.0) return 1.0;
    if (rho == 0.0) return v;
    if (u <= 0.0) return rho > 0.0 ? 1.0 : 0.0;
    if (u >= 1.0) return rho > 0.0 ? 0.0 : 1.0;
    const double xv = std_normal_quantile(v);
    const double xu = std_normal_quantile(u);
    return std_normal_cdf((xv - rho * xu) / s);
  };
  auto cond12 = [cond21](double u, double v, Side side) { return cond21(u, v, side); };

  Copula::Parts parts;
  parts.cond_2given1 = cond21;
  parts.cond_1given2 = cond12;
  parts.cdf = [cond21](double u, double v) {
    if (u <= 0.0 || v <= 0.0) return 0.0;
    if (u >= 1.0) return v;
    if (v >= 1.0) return u;
    auto f = [&](double w) { return cond21(v, w, Side::right); };
    QuadratureOptions opt;
    opt.abs_tol = 1e-10;
    opt.rel_tol = 1e-12;
    opt.breakpoints = {0.5 * u};
    return integrate(f, 0.0, u, opt);
  };
  // (p,q)-quantile independent for every |rho| < 1.
  parts.closed_form_qdc = [](double, double, Direction) -> std::optional<double> {
    return 0.0;
  };
  parts.label = "gaussian(rho=" + std::to_string(rho) + ")";
  return Copula(std::move(parts));
}

// ---------------------------------------------------------------------------
// Student t copula

Copula make_student_t(const StudentTParams& par) {
  const double rho = par.rho;
  const double nu = static_cast<double>(par.nu);
  if (std::isnan(rho) || std::fabs(rho) > 1.0) {
    throw DomainError("make_student_t: rho outside [-1,1]");
  }
  if (par.nu < 1) throw DomainError("make_student_t: nu must be >= 1");
  if (rho == 1.0) return make_frechet_upper();
  if (rho == -1.0) return make_frechet_lower();

  const double s0 = std::sqrt(1.0 - rho * rho);

  auto cond21 = [rho, nu, s0](double v, double u, Side) {
    if (v <= 0.0) return 0.0;
    if (v >= 1.0) return 1.0;
    if (u <= 0.0 || u >= 1.0) {
      // Limit of the conditional as the conditioning quantile diverges.
      const double lim = (u <= 0.0 ? rho : -rho) * std::sqrt(nu + 1.0) / s0;
      return student_t_cdf(lim, nu + 1.0);
    }
    const double xv = student_t_quantile(v, nu);
    const double xu = student_t_quantile(u, nu);
    const double scale = s0 * std::hypot(std::sqrt(nu), xu) / std::sqrt(nu + 1.0);
    return student_t_cdf((xv - rho * xu) / scale, nu + 1.0);
  };
  auto cond12 = [cond21](double u, double v, Side side) { return cond21(u, v, side); };

  Copula::Parts parts;
  parts.cond_2given1 = cond21;
  parts.cond_1given2 = cond12;
  parts.cdf = [cond21](double u, double v) {
    if (u <= 0.0 || v <= 0.0) return 0.0;
    if (u >= 1.0) return v;
    if (v >= 1.0) return u;
    auto f = [&](double w) { return cond21(v, w, Side::right); };
    QuadratureOptions opt;
    opt.abs_tol = 1e-10;
    opt.rel_tol = 1e-12;
    opt.breakpoints = {0.5 * u};
    return integrate(f, 0.0, u, opt);
  };
  parts.closed_form_qdc = [rho, nu](double p, double q,
                                    Direction) -> std::optional<double> {
    const bool p0 = p == 0.0, p1 = p == 1.0, q0 = q == 0.0, q1 = q == 1.0;
    if ((p0 && q0) || (p1 && q1)) {
      return 2.0 * student_t_cdf(-std::sqrt((nu + 1.0) * (1.0 - rho) / (1.0 + rho)),
                                 nu + 1.0);
    }
    if ((p0 && q1) || (p1 && q0)) {
      return 2.0 * student_t_cdf(-std::sqrt((nu + 1.0) * (1.0 + rho) / (1.0 - rho)),
                                 nu + 1.0);
    }
    return 0.0;  // zero at interior points and along the open edges
  };
  parts.label =
      "student-t(rho=" + std::to_string(rho) + ",nu=" + std::to_string(par.nu) + ")";
  return Copula(std::move(parts));
}

// ---------------------------------------------------------------------------
// Extreme-value copulas

namespace {

double ev_cdf(const PickandsFunction& A, double u, double v) {
  if (u <= 0.0 || v <= 0.0) return 0.0;
  if (u >= 1.0) return v;
  if (v >= 1.0) return u;
  const double luv = std::log(u * v);
  const double z = std::log(v) / luv;
  return std::exp(luv * A(z));
}

double ev_cond21(const PickandsFunction& A, double v, double u, Side side) {
  if (v <= 0.0) return 0.0;
  if (v >= 1.0) return 1.0;
  if (u <= 0.0) return std::pow(v, 1.0 + A.d_right(0.0));
  const double luv = std::log(u * v);
  const double z = std::log(v) / luv;
  // z increases with u, so the side carries over unchanged.
  const double ap = side == Side::right ? A.d_right(z) : A.d_left(z);
  return (ev_cdf(A, u, v) / u) * (A(z) - z * ap);
}

double ev_cond12(const PickandsFunction& A, double u, double v, Side side) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  if (v <= 0.0) return std::pow(u, 1.0 - A.d_left(1.0));
  const double luv = std::log(u * v);
  const double z = std::log(v) / luv;
  // z decreases with v: the right side in v is the left side in z.
  const double ap = side == Side::right ? A.d_left(z) : A.d_right(z);
  return (ev_cdf(A, u, v) / v) * (A(z) + (1.0 - z) * ap);
}

std::optional<double> ev_closed_form_impl(const PickandsFunction& A, double p, double q,
                                          Direction dir) {
  auto yx = [&A](double pp, double qq) -> double {
    const bool p0 = pp == 0.0, p1 = pp == 1.0, q0 = qq == 0.0, q1 = qq == 1.0;
    const double a_half = A(0.5);
    if (p0 && q0) return std::fabs(a_half - 0.5) <= kIndicatorTol ? 1.0 : 0.0;
    if (p1 && q1) return 2.0 * (1.0 - a_half);
    if (p0 || p1 || q0 || q1) return 0.0;
    return ev_qdc(A, QuantilePoint::of(pp, qq)).value;
  };
  double v = yx(p, q);
  if (dir == Direction::x_given_y) v = dual_direction(v, QuantilePoint::of(p, q));
  return clamp01(v);
}

}  // namespace

Copula make_ev(const PickandsFunction& A) {
  Copula::Parts parts;
  parts.cdf = [A](double u, double v) { return ev_cdf(A, u, v); };
  parts.cond_2given1 = [A](double v, double u, Side side) {
    return ev_cond21(A, v, u, side);
  };
  parts.cond_1given2 = [A](double u, double v, Side side) {
    return ev_cond12(A, u, v, side);
  };
  parts.closed_form_qdc = [A](double p, double q, Direction dir) {
    return ev_closed_form_impl(A, p, q, dir);
  };
  parts.label = "ev";
  return Copula(std::move(parts));
}

Copula make_cuadras_auge(double theta) {
  if (theta < 0.0 || theta > 1.0) {
    throw DomainError("make_cuadras_auge: theta outside [0,1]");
  }
  if (theta == 0.0) return make_product();
  if (theta == 1.0) return make_frechet_upper();
  return relabel(make_ev(PickandsFunction::cuadras_auge(theta)),
                 "cuadras-auge(theta=" + std::to_string(theta) + ")");
}

Copula make_ev_flat(double theta) {
  if (theta < 0.5 || theta > 1.0) throw DomainError("make_ev_flat: theta outside [1/2,1]");
  if (theta == 1.0) return make_product();
  if (theta == 0.5) return make_frechet_upper();
  return relabel(make_ev(PickandsFunction::flat(theta)),
                 "ev-flat(theta=" + std::to_string(theta) + ")");
}

// ---------------------------------------------------------------------------
// Archimedean copulas

Copula make_archimedean(const ArchimedeanGenerator& g, const std::string& label) {
  Copula::Parts parts;
  parts.cdf = [g](double u, double v) {
    if (u <= 0.0 || v <= 0.0) return 0.0;
    if (u >= 1.0) return v;
    if (v >= 1.0) return u;
    return g.phi_inv(g.phi(u) + g.phi(v));
  };
  parts.label = label;
  return Copula(std::move(parts));
}

Copula make_clayton(double alpha) {
  return make_archimedean(ArchimedeanGenerator::clayton(alpha),
                          "clayton(alpha=" + std::to_string(alpha) + ")");
}

Copula make_gumbel(double alpha) {
  return make_archimedean(ArchimedeanGenerator::gumbel(alpha),
                          "gumbel(alpha=" + std::to_string(alpha) + ")");
}

Copula make_archimedean_ex8(double theta) {
  if (!(theta > 0.0) || theta > 1.0) {
    throw DomainError("make_archimedean_ex8: theta outside (0,1]");
  }
  Copula base = make_archimedean(ArchimedeanGenerator::two_slope(theta),
                                 "archimedean-ex8(theta=" + std::to_string(theta) + ")");
  const double r = theta / (2.0 - theta);
  const double a = 0.5 * theta;
  auto yx = [r, a](double p, double q) -> double {
    // Singular support: two generator-kink ridges, the W-like band, and the
    // isolated half-weight point (theta/2, 1).
    if (near(p, a) && near(q, 1.0)) return 0.5 * (1.0 - r);
    if (near(q + p / r, 1.0) && p <= a + kIndicatorTol) return r;
    if (near(p + q / r, 1.0) && p >= a - kIndicatorTol) return r;
    if (near(p + q, 1.0 + a) && p > a + kIndicatorTol) return 1.0 - r;
    return 0.0;
  };
  return base.with_closed_form(closed_from_yx(yx));
}

// ---------------------------------------------------------------------------
// Shuffle copula

Copula make_shuffle() {
  Copula::Parts parts;
  parts.cdf = [](double u, double v) {
    if (u <= 0.0 || v <= 0.0) return 0.0;
    if (u >= 1.0) return v;
    if (v >= 1.0) return u;
    if (u < v / 3.0) return u;
    if (u < (2.0 - v) / 3.0) return v / 3.0;
    if (u < (2.0 + v) / 3.0) return u - (2.0 / 3.0) * (1.0 - v);
    return v;
  };
  parts.sampler = [](Rng& rng) {
    const double x = rng.uniform_open();
    double y;
    if (x < 1.0 / 3.0) {
      y = 3.0 * x;
    } else if (x < 2.0 / 3.0) {
      y = 2.0 - 3.0 * x;
    } else {
      y = 3.0 * x - 2.0;
    }
    return std::make_pair(x, y);
  };
  parts.closed_form_qdc = closed_from_yx([](double p, double q) -> double {
    if (near(p, q / 3.0) || near(p, (2.0 - q) / 3.0) || near(p, (2.0 + q) / 3.0)) {
      return 1.0 / 3.0;
    }
    return 0.0;
  });
  parts.label = "shuffle3";
  return Copula(std::move(parts));
}

}  // namespace qdc
