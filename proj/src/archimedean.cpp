#include "qdc/archimedean.hpp"

#include <cmath>
#include <limits>

#include "qdc/errors.hpp"

namespace qdc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

ArchimedeanGenerator::ArchimedeanGenerator(Fn phi, Fn phi_inv, Fn d_left, Fn d_right,
                                           double phi0)
    : phi_(std::move(phi)),
      phi_inv_(std::move(phi_inv)),
      d_left_(std::move(d_left)),
      d_right_(std::move(d_right)),
      phi0_(phi0) {
  if (!phi_ || !phi_inv_ || !d_left_ || !d_right_) {
    throw DomainError("ArchimedeanGenerator: missing function");
  }
}

double ArchimedeanGenerator::phi_inv(double s) const {
  if (s >= phi0_) return 0.0;
  if (s <= 0.0) return 1.0;
  return phi_inv_(s);
}

bool ArchimedeanGenerator::strict() const { return std::isinf(phi0_); }

ArchimedeanGenerator ArchimedeanGenerator::clayton(double alpha) {
  if (!(alpha > 0.0)) throw DomainError("clayton: alpha must be positive");
  auto phi = [alpha](double t) {
    if (t <= 0.0) return kInf;
    return (std::pow(t, -alpha) - 1.0) / alpha;
  };
  auto inv = [alpha](double s) { return std::pow(1.0 + alpha * s, -1.0 / alpha); };
  auto d = [alpha](double t) {
    if (t <= 0.0) return -kInf;
    return -std::pow(t, -alpha - 1.0);
  };
  return ArchimedeanGenerator(phi, inv, d, d, kInf);
}

ArchimedeanGenerator ArchimedeanGenerator::gumbel(double alpha) {
  if (!(alpha >= 1.0)) throw DomainError("gumbel: alpha must be >= 1");
  auto phi = [alpha](double t) {
    if (t <= 0.0) return kInf;
    return std::pow(-std::log(t), alpha);
  };
  auto inv = [alpha](double s) { return std::exp(-std::pow(s, 1.0 / alpha)); };
  auto d = [alpha](double t) {
    if (t <= 0.0) return -kInf;
    if (t >= 1.0) return alpha > 1.0 ? 0.0 : -1.0;
    return -alpha * std::pow(-std::log(t), alpha - 1.0) / t;
  };
  return ArchimedeanGenerator(phi, inv, d, d, kInf);
}

ArchimedeanGenerator ArchimedeanGenerator::two_slope(double theta) {
  if (!(theta > 0.0) || theta > 1.0) throw DomainError("two_slope: theta outside (0,1]");
  const double a = 0.5 * theta;
  const double s0 = (2.0 - theta) / theta;  // magnitude of the steep slope
  auto phi = [theta, a, s0](double t) {
    return t <= a ? s0 * (theta - t) : 1.0 - t;
  };
  auto inv = [theta, s0](double s) {
    if (s <= 1.0 - 0.5 * theta) return 1.0 - s;
    return theta - s / s0;
  };
  auto dl = [a, s0](double t) { return t <= a ? -s0 : -1.0; };
  auto dr = [a, s0](double t) { return t < a ? -s0 : -1.0; };
  return ArchimedeanGenerator(phi, inv, dl, dr, 2.0 - theta);
}

}  // namespace qdc
