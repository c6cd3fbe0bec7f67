#include "qdc/pickands.hpp"

#include <algorithm>
#include <string>

#include "qdc/errors.hpp"

namespace qdc {

PickandsFunction::PickandsFunction(Fn eval, Fn d_left, Fn d_right, std::vector<double> kinks)
    : eval_(std::move(eval)),
      d_left_(std::move(d_left)),
      d_right_(std::move(d_right)),
      kinks_(std::move(kinks)) {
  if (!eval_ || !d_left_ || !d_right_) throw DomainError("PickandsFunction: missing function");
  std::sort(kinks_.begin(), kinks_.end());
}

PickandsFunction PickandsFunction::independence() {
  return PickandsFunction([](double) { return 1.0; }, [](double) { return 0.0; },
                          [](double) { return 0.0; }, {});
}

PickandsFunction PickandsFunction::comonotone() {
  auto eval = [](double t) { return t < 0.5 ? 1.0 - t : t; };
  auto dl = [](double t) { return t <= 0.5 ? -1.0 : 1.0; };
  auto dr = [](double t) { return t < 0.5 ? -1.0 : 1.0; };
  return PickandsFunction(eval, dl, dr, {0.5});
}

PickandsFunction PickandsFunction::cuadras_auge(double theta) {
  if (theta < 0.0 || theta > 1.0) throw DomainError("cuadras_auge: theta outside [0,1]");
  auto eval = [theta](double t) { return 1.0 - theta * std::min(t, 1.0 - t); };
  auto dl = [theta](double t) { return t <= 0.5 ? -theta : theta; };
  auto dr = [theta](double t) { return t < 0.5 ? -theta : theta; };
  std::vector<double> kinks = theta > 0.0 ? std::vector<double>{0.5} : std::vector<double>{};
  return PickandsFunction(eval, dl, dr, std::move(kinks));
}

PickandsFunction PickandsFunction::flat(double theta) {
  if (theta < 0.5 || theta > 1.0) throw DomainError("flat: theta outside [1/2,1]");
  auto eval = [theta](double t) { return std::max({t, 1.0 - t, theta}); };
  auto dl = [theta](double t) {
    if (t <= 1.0 - theta) return -1.0;
    if (t <= theta) return 0.0;
    return 1.0;
  };
  auto dr = [theta](double t) {
    if (t < 1.0 - theta) return -1.0;
    if (t < theta) return 0.0;
    return 1.0;
  };
  std::vector<double> kinks;
  if (theta < 1.0) {
    if (theta == 0.5) {
      kinks = {0.5};
    } else {
      kinks = {1.0 - theta, theta};
    }
  }
  return PickandsFunction(eval, dl, dr, std::move(kinks));
}

}  // namespace qdc
