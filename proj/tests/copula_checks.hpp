// Shared grid checks: grounded margins, 2-increasing cell volumes, and the
// Frechet-Hoeffding envelope, evaluated on an (n+1)x(n+1) grid.
#pragma once

#include <cmath>
#include <vector>

#include "qdc/copula.hpp"

namespace qdc_test {

struct GridReport {
  double max_grounded = 0.0;   // |C(u,0)|, |C(0,v)|
  double max_margin = 0.0;     // |C(u,1)-u|, |C(1,v)-v|
  double min_volume = 0.0;     // most negative rectangle volume
  double max_frechet = 0.0;    // worst excursion outside [W, M]
};

inline GridReport grid_report(const qdc::Copula& c, int n = 20) {
  GridReport rep;
  std::vector<std::vector<double>> g(n + 1, std::vector<double>(n + 1));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const double u = static_cast<double>(i) / n;
      const double v = static_cast<double>(j) / n;
      g[i][j] = c.cdf(u, v);
      rep.max_grounded = std::max({rep.max_grounded, i == 0 ? std::fabs(g[i][j]) : 0.0,
                                   j == 0 ? std::fabs(g[i][j]) : 0.0});
      if (i == n) rep.max_margin = std::max(rep.max_margin, std::fabs(g[i][j] - v));
      if (j == n) rep.max_margin = std::max(rep.max_margin, std::fabs(g[i][j] - u));
      const double w = std::max(u + v - 1.0, 0.0);
      const double m = std::min(u, v);
      rep.max_frechet = std::max({rep.max_frechet, w - g[i][j], g[i][j] - m});
    }
  }
  // 2-increasing on every grid rectangle; cell sums imply the rest but the
  // full scan is cheap on cached values.
  for (int i1 = 0; i1 <= n; ++i1) {
    for (int i2 = i1 + 1; i2 <= n; ++i2) {
      for (int j1 = 0; j1 <= n; ++j1) {
        for (int j2 = j1 + 1; j2 <= n; ++j2) {
          const double vol = g[i2][j2] - g[i2][j1] - g[i1][j2] + g[i1][j1];
          rep.min_volume = std::min(rep.min_volume, vol);
        }
      }
    }
  }
  return rep;
}

}  // namespace qdc_test
