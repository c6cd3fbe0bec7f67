#include "qdc/interp.hpp"

#include <algorithm>
#include <cmath>

#include "qdc/errors.hpp"

namespace qdc {

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const std::size_t n = x_.size();
  if (n < 2 || y_.size() != n) throw DomainError("MonotoneCubic: need >= 2 nodes");
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!(x_[i] < x_[i + 1])) throw DomainError("MonotoneCubic: x must be strictly increasing");
  }

  std::vector<double> h(n - 1), delta(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = x_[i + 1] - x_[i];
    delta[i] = (y_[i + 1] - y_[i]) / h[i];
  }

  d_.assign(n, 0.0);
  d_[0] = delta[0];
  d_[n - 1] = delta[n - 2];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (delta[i - 1] * delta[i] <= 0.0) {
      d_[i] = 0.0;
    } else {
      const double w1 = 2.0 * h[i] + h[i - 1];
      const double w2 = h[i] + 2.0 * h[i - 1];
      d_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
    }
  }
  // Fritsch-Carlson limiter keeps the interpolant monotone on each cell.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (delta[i] == 0.0) {
      d_[i] = 0.0;
      d_[i + 1] = 0.0;
      continue;
    }
    const double alpha = d_[i] / delta[i];
    const double beta = d_[i + 1] / delta[i];
    const double s = alpha * alpha + beta * beta;
    if (s > 9.0) {
      const double tau = 3.0 / std::sqrt(s);
      d_[i] = tau * alpha * delta[i];
      d_[i + 1] = tau * beta * delta[i];
    }
  }
}

std::size_t MonotoneCubic::find_cell(double xq) const {
  const auto it = std::upper_bound(x_.begin(), x_.end(), xq);
  if (it == x_.begin()) return 0;
  std::size_t i = static_cast<std::size_t>(it - x_.begin()) - 1;
  if (i >= x_.size() - 1) i = x_.size() - 2;
  return i;
}

double MonotoneCubic::operator()(double xq) const {
  if (xq <= x_.front()) return y_.front();
  if (xq >= x_.back()) return y_.back();
  const std::size_t i = find_cell(xq);
  const double h = x_[i + 1] - x_[i];
  const double t = (xq - x_[i]) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
  const double h10 = t3 - 2.0 * t2 + t;
  const double h01 = -2.0 * t3 + 3.0 * t2;
  const double h11 = t3 - t2;
  return h00 * y_[i] + h10 * h * d_[i] + h01 * y_[i + 1] + h11 * h * d_[i + 1];
}

double MonotoneCubic::derivative(double xq) const {
  if (xq <= x_.front()) return d_.front();
  if (xq >= x_.back()) return d_.back();
  const std::size_t i = find_cell(xq);
  const double h = x_[i + 1] - x_[i];
  const double t = (xq - x_[i]) / h;
  const double dh00 = (6.0 * t * t - 6.0 * t) / h;
  const double dh10 = 3.0 * t * t - 4.0 * t + 1.0;
  const double dh01 = -dh00;
  const double dh11 = 3.0 * t * t - 2.0 * t;
  return dh00 * y_[i] + dh10 * d_[i] + dh01 * y_[i + 1] + dh11 * d_[i + 1];
}

double MonotoneCubic::inverse(double yq) const {
  if (yq <= y_.front()) return x_.front();
  if (yq >= y_.back()) return x_.back();
  const auto it = std::upper_bound(y_.begin(), y_.end(), yq);
  std::size_t i = static_cast<std::size_t>(it - y_.begin());
  i = (i == 0) ? 0 : i - 1;
  if (i >= x_.size() - 1) i = x_.size() - 2;
  double lo = x_[i];
  double hi = x_[i + 1];
  for (int k = 0; k < 100; ++k) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if ((*this)(mid) < yq) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace qdc
