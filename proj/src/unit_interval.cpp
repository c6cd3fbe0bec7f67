#include "qdc/unit_interval.hpp"

#include <string>

namespace qdc {

UnitValue::UnitValue(double v) : v_(v) {
  if (std::isnan(v) || v < 0.0 || v > 1.0) {
    throw DomainError("UnitValue out of [0,1]: " + std::to_string(v));
  }
}

BoundaryClass classify_unit(double x) {
  if (x == 0.0) return BoundaryClass::zero;
  if (x == 1.0) return BoundaryClass::one;
  return BoundaryClass::interior;
}

QuantilePoint::QuantilePoint(UnitValue p_, UnitValue q_)
    : p(p_), q(q_), p_class(classify_unit(p_.value())), q_class(classify_unit(q_.value())) {}

Rectangle::Rectangle(UnitValue u1_, UnitValue u2_, UnitValue v1_, UnitValue v2_)
    : u1(u1_), u2(u2_), v1(v1_), v2(v2_) {
  if (u1.value() > u2.value() || v1.value() > v2.value()) {
    throw DomainError("Rectangle requires u1 <= u2 and v1 <= v2");
  }
}

Interval clamp_interval(double a, double t) {
  if (!std::isfinite(a) || !std::isfinite(t)) {
    throw DomainError("clamp_interval requires finite inputs");
  }
  return Interval{plus_part(a - t), minus_part(a + t)};
}

}  // namespace qdc
