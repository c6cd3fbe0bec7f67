#pragma once

#include <functional>
#include <vector>

namespace qdc {

// Pickands dependence function A: [0,1] -> [1/2,1] of an extreme-value
// copula, with one-sided derivatives and the registered points where the
// derivative jumps.
class PickandsFunction {
 public:
  using Fn = std::function<double(double)>;

  PickandsFunction(Fn eval, Fn d_left, Fn d_right, std::vector<double> kinks);

  double operator()(double t) const { return eval_(t); }
  double d_left(double t) const { return d_left_(t); }
  double d_right(double t) const { return d_right_(t); }
  const std::vector<double>& kinks() const { return kinks_; }

  static PickandsFunction independence();           // A == 1
  static PickandsFunction comonotone();             // A(t) = max(t, 1-t)
  static PickandsFunction cuadras_auge(double theta);  // 1 - theta*min(t, 1-t)
  static PickandsFunction flat(double theta);       // max(t, 1-t, theta)

 private:
  Fn eval_, d_left_, d_right_;
  std::vector<double> kinks_;
};

}  // namespace qdc
