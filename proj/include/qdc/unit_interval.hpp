#pragma once

#include <cmath>

#include "qdc/errors.hpp"

namespace qdc {

// A real number constrained to [0,1].  Construction rejects NaN and
// out-of-range values.
class UnitValue {
 public:
  UnitValue() = default;
  explicit UnitValue(double v);

  double value() const { return v_; }

 private:
  double v_ = 0.0;
};

enum class BoundaryClass { interior, zero, one };

BoundaryClass classify_unit(double x);

// A point (p,q) of the closed unit square together with the boundary
// classification of each coordinate.
struct QuantilePoint {
  UnitValue p;
  UnitValue q;
  BoundaryClass p_class;
  BoundaryClass q_class;

  QuantilePoint(UnitValue p_, UnitValue q_);
  static QuantilePoint of(double p, double q) {
    return QuantilePoint(UnitValue(p), UnitValue(q));
  }

  bool interior() const {
    return p_class == BoundaryClass::interior && q_class == BoundaryClass::interior;
  }
};

// Axis-aligned rectangle [u1,u2] x [v1,v2] inside the unit square.
struct Rectangle {
  UnitValue u1, u2, v1, v2;

  Rectangle(UnitValue u1_, UnitValue u2_, UnitValue v1_, UnitValue v2_);
  static Rectangle of(double u1, double u2, double v1, double v2) {
    return Rectangle(UnitValue(u1), UnitValue(u2), UnitValue(v1), UnitValue(v2));
  }
};

// Closed interval returned by clamp_interval.
struct Interval {
  double lo;
  double hi;
  double width() const { return hi - lo; }
};

// ((a-t)^+, (a+t)^-) with a^+ = max(a,0) and a^- = 1 - (1-a)^+.
Interval clamp_interval(double a, double t);

inline double plus_part(double a) { return a > 0.0 ? a : 0.0; }
// a^- = 1 - (1-a)^+, i.e. min(a, 1); written directly so no ulp is lost.
inline double minus_part(double a) { return a < 1.0 ? a : 1.0; }

inline double clamp01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

}  // namespace qdc
