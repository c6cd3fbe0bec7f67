#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qdc/archimedean.hpp"
#include "qdc/copula.hpp"
#include "qdc/pickands.hpp"
#include "qdc/unit_interval.hpp"

namespace qdc {

// Geometric discretization of the t -> 0+ limit.
struct LimitSchedule {
  double t0 = 0.0625;  // 2^-4
  double ratio = 0.5;
  int max_steps = 24;
  double abs_tol = 1e-4;
  bool extrapolate = true;

  void validate() const;
};

enum class QdcMethod { volume, conditional, closed_form };

struct QdcEstimate {
  double value = 0.0;
  bool converged = false;
  std::vector<std::pair<double, double>> trace;  // (t, ratio) pairs
  QdcMethod method = QdcMethod::volume;
};

// lambda(q|p) as the limit of C-volume ratios over shrinking quantile bands.
QdcEstimate qdc_volume(const Copula& c, const QuantilePoint& pt, Direction dir,
                       const LimitSchedule& sched);

// lambda(q|p) through one-sided conditional cdfs, one branch per boundary
// classification of (p,q).  Falls back to finite-difference conditionals
// when no analytic ones are attached.
QdcEstimate qdc_conditional(const Copula& c, const QuantilePoint& pt, Direction dir,
                            const LimitSchedule& sched);

// Family closed form, when the copula carries one.
std::optional<QdcEstimate> qdc_closed_form(const Copula& c, const QuantilePoint& pt,
                                           Direction dir);

// Derivative-jump formula for extreme-value copulas at interior (p,q).
// Throws BoundaryPointError if p or q lies in {0,1}.
QdcEstimate ev_qdc(const PickandsFunction& A, const QuantilePoint& pt);

struct TailCoefficients {
  QdcEstimate lower;
  QdcEstimate upper;
};

// (lambda_L, lambda_U) from the diagonal limits; lambda_U goes through the
// survival copula.
TailCoefficients tail_coefficients(const Copula& c, const LimitSchedule& sched);

// Generator-side tail limits, with the shortcut rules for finite phi'(0+)
// and negative phi'(1-).
TailCoefficients archimedean_tails(const ArchimedeanGenerator& g,
                                   const LimitSchedule& sched);

// lambda_{X|Y}(p|q) from lambda_{Y|X}(q|p): factor 1, 2 or 1/2 according to
// which of p, q sit on the boundary.
double dual_direction(double value, const QuantilePoint& pt);

enum class MethodChoice { automatic, volume, conditional, closed_form };

// Facade: automatic tries closed_form, then conditional (when analytic
// conditionals exist), then volume.
QdcEstimate qdc(const Copula& c, const QuantilePoint& pt, Direction dir,
                const LimitSchedule& sched, MethodChoice method = MethodChoice::automatic);

}  // namespace qdc
