// The (p,q)-quantile dependence coefficient by three routes: C-volume
// ratios, one-sided conditional cdfs, and family closed forms.
//
// Numeric limits share one engine: evaluate R(t) over a geometric schedule,
// declare convergence when two successive values agree within abs_tol (only
// once t is clear of the clamping regime of interior coordinates), and
// report the Richardson value 2 R(t_k) - R(t_{k-1}) when the trailing
// differences look linear in t.

#include "qdc/quantile_dependence.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "qdc/errors.hpp"

namespace qdc {

namespace {

constexpr double kKinkTol = 1e-12;
constexpr double kJumpFloor = 1e-14;

struct LimitRun {
  double value = 0.0;
  bool converged = false;
  std::vector<std::pair<double, double>> trace;
};

// convergence_below: largest t at which two-successive-value agreement may be
// taken at face value (clamping must be over for interior coordinates).
LimitRun run_limit(const LimitSchedule& sched, double convergence_below,
                   const std::function<double(double)>& ratio_at) {
  sched.validate();
  LimitRun run;
  double t = sched.t0;
  double prev = std::numeric_limits<double>::quiet_NaN();
  for (int k = 0; k < sched.max_steps; ++k) {
    const double r = ratio_at(t);
    run.trace.emplace_back(t, r);
    if (k >= 1 && t <= convergence_below && std::fabs(r - prev) <= sched.abs_tol) {
      run.converged = true;
      prev = r;
      break;
    }
    prev = r;
    t *= sched.ratio;
  }
  run.value = run.trace.back().second;
  if (sched.extrapolate && run.trace.size() >= 3) {
    const auto n = run.trace.size();
    const double d1 = run.trace[n - 1].second - run.trace[n - 2].second;
    const double d0 = run.trace[n - 2].second - run.trace[n - 3].second;
    if (d0 != 0.0 && d1 != 0.0 && d0 * d1 > 0.0) {
      const double r = d1 / d0;
      if (r > 0.3 && r < 0.7) {
        run.value = run.trace[n - 1].second + d1;  // 2 R(t/2) - R(t)
      }
    }
  }
  run.value = clamp01(run.value);
  return run;
}

double clamp_guard(const QuantilePoint& pt) {
  double g = std::numeric_limits<double>::infinity();
  const double p = pt.p.value();
  const double q = pt.q.value();
  if (pt.p_class == BoundaryClass::interior) g = std::min(g, 0.5 * std::min(p, 1.0 - p));
  if (pt.q_class == BoundaryClass::interior) g = std::min(g, 0.5 * std::min(q, 1.0 - q));
  return g;
}

// Average of the two one-sided conditionals; off kinks both sides agree, and
// on a kink the average is what makes the four-corner chain rule exact.
double c21(const Copula& c, double v, double u) {
  return 0.5 * (c.cond_2given1(v, u, Side::left) + c.cond_2given1(v, u, Side::right));
}

double c12(const Copula& c, double u, double v) {
  return 0.5 * (c.cond_1given2(u, v, Side::left) + c.cond_1given2(u, v, Side::right));
}

}  // namespace

void LimitSchedule::validate() const {
  if (!(t0 > 0.0) || t0 > 0.5) throw DomainError("LimitSchedule: t0 outside (0, 1/2]");
  if (!(ratio > 0.0) || ratio >= 1.0) throw DomainError("LimitSchedule: ratio outside (0,1)");
  if (max_steps < 3) throw DomainError("LimitSchedule: max_steps must be >= 3");
  if (!(abs_tol > 0.0)) throw DomainError("LimitSchedule: abs_tol must be positive");
}

QdcEstimate qdc_volume(const Copula& c, const QuantilePoint& pt, Direction dir,
                       const LimitSchedule& sched) {
  const double p = pt.p.value();
  const double q = pt.q.value();
  auto ratio_at = [&](double t) {
    const Interval iu = clamp_interval(p, t);
    const Interval iv = clamp_interval(q, t);
    const double den = dir == Direction::y_given_x ? iu.width() : iv.width();
    const double vol = c_volume_raw(c, iu.lo, iu.hi, iv.lo, iv.hi);
    return clamp01(vol / den);
  };
  LimitRun run = run_limit(sched, clamp_guard(pt), ratio_at);
  QdcEstimate est;
  est.value = run.value;
  est.converged = run.converged;
  est.trace = std::move(run.trace);
  est.method = QdcMethod::volume;
  return est;
}

QdcEstimate qdc_conditional(const Copula& c, const QuantilePoint& pt, Direction dir,
                            const LimitSchedule& sched) {
  const double p = pt.p.value();
  const double q = pt.q.value();
  const BoundaryClass pc = pt.p_class;
  const BoundaryClass qc = pt.q_class;

  // The nine boundary branches, derived from the volume expansion with
  // one-sided conditional limits (the l'Hopital route of the paper).
  std::function<double(double)> sum_at;
  using B = BoundaryClass;
  if (pc == B::interior && qc == B::interior) {
    sum_at = [&c, p, q](double t) {
      return 0.5 * (c21(c, q + t, p + t) - c21(c, q - t, p + t) + c21(c, q + t, p - t) -
                    c21(c, q - t, p - t) + c12(c, p + t, q + t) - c12(c, p - t, q + t) +
                    c12(c, p + t, q - t) - c12(c, p - t, q - t));
    };
  } else if (pc == B::zero && qc == B::interior) {
    sum_at = [&c, q](double t) {
      return c21(c, q + t, t) - c21(c, q - t, t) + c12(c, t, q + t) + c12(c, t, q - t);
    };
  } else if (pc == B::one && qc == B::interior) {
    sum_at = [&c, q](double t) {
      return 2.0 - c12(c, 1.0 - t, q + t) - c12(c, 1.0 - t, q - t) +
             c21(c, q + t, 1.0 - t) - c21(c, q - t, 1.0 - t);
    };
  } else if (pc == B::interior && qc == B::zero) {
    sum_at = [&c, p](double t) {
      return 0.5 * (c21(c, t, p + t) + c21(c, t, p - t) + c12(c, p + t, t) -
                    c12(c, p - t, t));
    };
  } else if (pc == B::interior && qc == B::one) {
    sum_at = [&c, p](double t) {
      return 0.5 * (2.0 - c21(c, 1.0 - t, p + t) - c21(c, 1.0 - t, p - t) +
                    c12(c, p + t, 1.0 - t) - c12(c, p - t, 1.0 - t));
    };
  } else if (pc == B::zero && qc == B::zero) {
    sum_at = [&c](double t) { return c21(c, t, t) + c12(c, t, t); };
  } else if (pc == B::one && qc == B::one) {
    sum_at = [&c](double t) { return 2.0 - c21(c, 1.0 - t, 1.0 - t) - c12(c, 1.0 - t, 1.0 - t); };
  } else if (pc == B::zero && qc == B::one) {
    sum_at = [&c](double t) { return 1.0 - c21(c, 1.0 - t, t) + c12(c, t, 1.0 - t); };
  } else {  // p = 1, q = 0
    sum_at = [&c](double t) { return 1.0 - c12(c, 1.0 - t, t) + c21(c, t, 1.0 - t); };
  }

  auto ratio_at = [&sum_at](double t) { return clamp01(sum_at(t)); };
  LimitRun run = run_limit(sched, clamp_guard(pt), ratio_at);

  QdcEstimate est;
  est.value = run.value;
  est.converged = run.converged;
  est.trace = std::move(run.trace);
  est.method = QdcMethod::conditional;
  if (dir == Direction::x_given_y) {
    est.value = dual_direction(est.value, pt);
    for (auto& [t, r] : est.trace) r = dual_direction(r, pt);
  }
  return est;
}

std::optional<QdcEstimate> qdc_closed_form(const Copula& c, const QuantilePoint& pt,
                                           Direction dir) {
  auto v = c.closed_form_qdc(pt.p.value(), pt.q.value(), dir);
  if (!v) return std::nullopt;
  QdcEstimate est;
  est.value = clamp01(*v);
  est.converged = true;
  est.method = QdcMethod::closed_form;
  return est;
}

QdcEstimate ev_qdc(const PickandsFunction& A, const QuantilePoint& pt) {
  if (!pt.interior()) {
    throw BoundaryPointError("ev_qdc: p and q must lie in (0,1); use tail formulas");
  }
  const double p = pt.p.value();
  const double q = pt.q.value();
  const double lpq = std::log(p * q);
  const double delta = std::log(q) / lpq;

  double jump = 0.0;
  for (double k : A.kinks()) {
    if (std::fabs(delta - k) <= kKinkTol) {
      jump = A.d_right(k) - A.d_left(k);
      break;
    }
  }

  QdcEstimate est;
  est.method = QdcMethod::closed_form;
  est.converged = true;
  if (std::fabs(jump) < kJumpFloor) {
    est.value = 0.0;
    return est;
  }
  est.value = clamp01((std::log(q) / (p * lpq)) * std::exp(lpq * A(delta)) * jump);
  return est;
}

TailCoefficients tail_coefficients(const Copula& c, const LimitSchedule& sched) {
  auto lower_ratio = [&c](double t) { return clamp01(c.cdf(t, t) / t); };
  const Copula sc = survival(c);
  auto upper_ratio = [sc](double t) { return clamp01(sc.cdf(t, t) / t); };

  TailCoefficients out;
  const double no_guard = std::numeric_limits<double>::infinity();
  LimitRun lo = run_limit(sched, no_guard, lower_ratio);
  LimitRun up = run_limit(sched, no_guard, upper_ratio);
  out.lower = QdcEstimate{lo.value, lo.converged, std::move(lo.trace), QdcMethod::volume};
  out.upper = QdcEstimate{up.value, up.converged, std::move(up.trace), QdcMethod::volume};
  return out;
}

TailCoefficients archimedean_tails(const ArchimedeanGenerator& g,
                                   const LimitSchedule& sched) {
  TailCoefficients out;
  const double no_guard = std::numeric_limits<double>::infinity();

  if (std::isfinite(g.d_right(0.0))) {
    // phi'(0) > -inf forces lambda_L = 0.
    out.lower = QdcEstimate{0.0, true, {}, QdcMethod::closed_form};
  } else {
    auto ratio = [&g](double t) { return clamp01(g.phi_inv(2.0 * g.phi(t)) / t); };
    LimitRun run = run_limit(sched, no_guard, ratio);
    out.lower = QdcEstimate{run.value, run.converged, std::move(run.trace), QdcMethod::volume};
  }

  if (g.d_left(1.0) < -1e-12) {
    // phi'(1) < 0 forces lambda_U = 0.
    out.upper = QdcEstimate{0.0, true, {}, QdcMethod::closed_form};
  } else {
    auto ratio = [&g](double t) {
      return clamp01(2.0 - (1.0 - g.phi_inv(2.0 * t)) / (1.0 - g.phi_inv(t)));
    };
    LimitRun run = run_limit(sched, no_guard, ratio);
    out.upper = QdcEstimate{run.value, run.converged, std::move(run.trace), QdcMethod::volume};
  }
  return out;
}

double dual_direction(double value, const QuantilePoint& pt) {
  const bool p_interior = pt.p_class == BoundaryClass::interior;
  const bool q_interior = pt.q_class == BoundaryClass::interior;
  double factor = 1.0;
  if (p_interior && !q_interior) {
    factor = 2.0;
  } else if (!p_interior && q_interior) {
    factor = 0.5;
  }
  return clamp01(value * factor);
}

QdcEstimate qdc(const Copula& c, const QuantilePoint& pt, Direction dir,
                const LimitSchedule& sched, MethodChoice method) {
  switch (method) {
    case MethodChoice::volume:
      return qdc_volume(c, pt, dir, sched);
    case MethodChoice::conditional:
      return qdc_conditional(c, pt, dir, sched);
    case MethodChoice::closed_form: {
      auto est = qdc_closed_form(c, pt, dir);
      if (!est) {
        throw MissingClosedFormError("qdc: no closed form for " + c.label());
      }
      return *est;
    }
    case MethodChoice::automatic:
      break;
  }
  if (auto est = qdc_closed_form(c, pt, dir)) return *est;
  if (c.has_analytic_conditionals()) {
    QdcEstimate est = qdc_conditional(c, pt, dir, sched);
    if (est.converged) return est;
  }
  return qdc_volume(c, pt, dir, sched);
}

}  // namespace qdc
