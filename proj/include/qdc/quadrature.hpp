#pragma once

#include <functional>
#include <vector>

namespace qdc {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-12;
  int max_panels = 4096;
  // Interior points where the integrand changes character; panels are split
  // there before any adaptive refinement.
  std::vector<double> breakpoints;
};

// Adaptive Gauss-Kronrod (G7,K15) integration of f over [a,b].
// Throws QuadratureError if the error estimate cannot be brought below
// max(abs_tol, rel_tol*|I|) within max_panels panels.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opt = {});

}  // namespace qdc
