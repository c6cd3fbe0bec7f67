#pragma once

#include <stdexcept>
#include <string>

namespace qdc {

// Out-of-range or otherwise invalid argument (NaN, bad parameter, ...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Four-corner sum of a copula went below -1e-12: the cdf is not 2-increasing.
struct NegativeVolumeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite-difference conditional requested at u in {0,1} without an analytic one.
struct DegenerateBoundaryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MissingConditionalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MissingClosedFormError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ev_qdc called with p or q on the boundary of the unit interval.
struct BoundaryPointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SamplerUnavailableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyConditioningSetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qdc
