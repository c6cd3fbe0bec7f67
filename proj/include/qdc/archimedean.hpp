#pragma once

#include <functional>

namespace qdc {

// Archimedean generator: phi strictly decreasing convex on [0,1] with
// phi(1) = 0, together with the pseudo-inverse and one-sided derivatives.
// phi0 = phi(0) may be +infinity (strict generator).
class ArchimedeanGenerator {
 public:
  using Fn = std::function<double(double)>;

  ArchimedeanGenerator(Fn phi, Fn phi_inv, Fn d_left, Fn d_right, double phi0);

  double phi(double t) const { return phi_(t); }
  // Pseudo-inverse: phi^{-1}(s) for s <= phi0, and 0 beyond.
  double phi_inv(double s) const;
  double d_left(double t) const { return d_left_(t); }
  double d_right(double t) const { return d_right_(t); }
  double phi0() const { return phi0_; }
  bool strict() const;

  static ArchimedeanGenerator clayton(double alpha);  // (t^-a - 1)/a, a > 0
  static ArchimedeanGenerator gumbel(double alpha);   // (-ln t)^a, a >= 1
  // Two-slope non-strict generator: (2-theta)/theta*(theta-t) on [0, theta/2],
  // 1-t on [theta/2, 1]; theta in (0,1].  Reduces to 1-t (the W generator)
  // at theta = 1.
  static ArchimedeanGenerator two_slope(double theta);

 private:
  Fn phi_, phi_inv_, d_left_, d_right_;
  double phi0_;
};

}  // namespace qdc
