#pragma once

#include <vector>

namespace qdc {

// Fritsch-Carlson monotone cubic interpolant through strictly increasing
// abscissae.  Evaluation clamps to the end values outside the grid.
class MonotoneCubic {
 public:
  MonotoneCubic() = default;
  MonotoneCubic(std::vector<double> x, std::vector<double> y);

  double operator()(double xq) const;
  double derivative(double xq) const;

  // Inverse for data with strictly increasing y; clamps outside [y0, yn].
  double inverse(double yq) const;

  double x_front() const { return x_.front(); }
  double x_back() const { return x_.back(); }
  double y_front() const { return y_.front(); }
  double y_back() const { return y_.back(); }

 private:
  std::size_t find_cell(double xq) const;

  std::vector<double> x_, y_, d_;  // nodes, values, node slopes
};

}  // namespace qdc
