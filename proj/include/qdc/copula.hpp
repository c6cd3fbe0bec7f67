#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "qdc/rng.hpp"
#include "qdc/unit_interval.hpp"

namespace qdc {

enum class Direction { y_given_x, x_given_y };
enum class Side { left, right };

// A bivariate copula as an immutable capability record.  The cdf is required;
// analytic conditionals, a dedicated sampler and a closed-form quantile
// dependence coefficient are optional and discovered by the estimators.
class Copula {
 public:
  using CdfFn = std::function<double(double, double)>;
  // cond_2given1(v, u, side) = C_{2|1}(v|u); cond_1given2(u, v, side) = C_{1|2}(u|v).
  using ConditionalFn = std::function<double(double, double, Side)>;
  using SamplerFn = std::function<std::pair<double, double>(Rng&)>;
  using ClosedFormFn =
      std::function<std::optional<double>(double, double, Direction)>;

  struct Parts {
    CdfFn cdf;
    ConditionalFn cond_2given1;
    ConditionalFn cond_1given2;
    SamplerFn sampler;
    ClosedFormFn closed_form_qdc;
    std::string label;
  };

  explicit Copula(Parts parts);

  double cdf(double u, double v) const;

  bool has_cond_2given1() const { return static_cast<bool>(parts_.cond_2given1); }
  bool has_cond_1given2() const { return static_cast<bool>(parts_.cond_1given2); }
  bool has_analytic_conditionals() const {
    return has_cond_2given1() && has_cond_1given2();
  }
  bool has_sampler() const { return static_cast<bool>(parts_.sampler); }
  bool has_closed_form() const { return static_cast<bool>(parts_.closed_form_qdc); }

  // Analytic conditional when available, otherwise a one-sided finite
  // difference of the cdf with step 1e-6.  Throws DegenerateBoundaryError for
  // the fallback at u (resp. v) in {0,1}.
  double cond_2given1(double v, double u, Side side) const;
  double cond_1given2(double u, double v, Side side) const;

  std::pair<double, double> sample(Rng& rng) const;
  std::optional<double> closed_form_qdc(double p, double q, Direction dir) const;

  const std::string& label() const { return parts_.label; }

  // Copies with one capability replaced (used by family constructors).
  Copula with_closed_form(ClosedFormFn fn) const;
  Copula with_sampler(SamplerFn fn) const;
  Copula with_label(std::string label) const;

 private:
  Parts parts_;
};

// Four-corner inclusion-exclusion sum; may be slightly negative from rounding.
double c_volume_raw(const Copula& c, double u1, double u2, double v1, double v2);

// C-volume of a rectangle.  Negative values within 1e-12 are clamped to zero;
// anything more negative throws NegativeVolumeError.
double c_volume(const Copula& c, const Rectangle& r);

Copula survival(const Copula& c);
Copula reflect_v(const Copula& c);  // C*(u,v)  = u - C(u, 1-v)
Copula reflect_u(const Copula& c);  // C**(u,v) = v - C(1-u, v)
Copula convex_mix(const Copula& c1, const Copula& c2, UnitValue omega);

}  // namespace qdc
