#pragma once

namespace qdc {

double std_normal_pdf(double x);
double std_normal_cdf(double x);

// Inverse of std_normal_cdf on (0,1).  Throws DomainError outside.
double std_normal_quantile(double p);

// Student t with nu > 0 degrees of freedom (nu need not be integral).
double student_t_pdf(double x, double nu);
double student_t_cdf(double x, double nu);
double student_t_quantile(double p, double nu);

// Regularized incomplete beta function I_x(a,b).
double incomplete_beta(double a, double b, double x);

}  // namespace qdc
