#pragma once

#include <memory>

#include "qdc/archimedean.hpp"
#include "qdc/copula.hpp"
#include "qdc/interp.hpp"
#include "qdc/pickands.hpp"

namespace qdc {

struct GaussianParams {
  double rho;  // |rho| <= 1; the endpoints construct M / W
};

struct StudentTParams {
  double rho;
  int nu;  // degrees of freedom, >= 1
};

Copula make_product();
Copula make_frechet_upper();
Copula make_frechet_lower();

Copula make_gaussian(const GaussianParams& p);
Copula make_student_t(const StudentTParams& p);

// Extreme-value copula exp(ln(uv) A(ln v / ln uv)).
Copula make_ev(const PickandsFunction& A);
Copula make_cuadras_auge(double theta);  // EV with A = 1 - theta*min(t,1-t)
Copula make_ev_flat(double theta);       // EV with A = max(t, 1-t, theta)

// Archimedean copula phi^{[-1]}(phi(u) + phi(v)).
Copula make_archimedean(const ArchimedeanGenerator& g, const std::string& label);
Copula make_clayton(double alpha);
Copula make_gumbel(double alpha);
// Non-strict two-slope generator family; reduces to W at theta = 1.
Copula make_archimedean_ex8(double theta);

// The fixed three-segment shuffle (Y piecewise linear in X).
Copula make_shuffle();

// Copula of the heteroscedastic regression pair X ~ N(0,1),
// Y | X=x ~ N(beta0 + beta1 x, x^2).  The marginal cdf G of Y - beta0 is
// tabulated on construction; G^{-1} values used in the copula cdf are
// polished against the exact quadrature cdf.
class RegressionModel {
 public:
  RegressionModel(double beta0, double beta1);

  double beta0() const { return beta0_; }
  double beta1() const { return beta1_; }
  double sigma() const { return sigma_; }

  double g_exact(double y) const;  // quadrature cdf of Y - beta0
  double g_cdf(double y) const;    // tabulated interpolant
  double g_inv(double v) const;    // interpolant bracket + polish on g_exact

  double cond_2given1(double v, double u) const;
  double cdf(double u, double v) const;

 private:
  double beta0_;
  double beta1_;
  double sigma_;
  MonotoneCubic table_;
};

Copula make_regression_model(double beta0, double beta1);

}  // namespace qdc
