#include "qdc/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qdc/errors.hpp"

namespace qdc {

namespace {

constexpr double kVEps = 1e-12;
constexpr double kInvTol = 1e-10;

// Solve C_{2|1}(v|u) = w for v by bisection; the conditional is a cdf in v.
double invert_conditional(const Copula& c, double u, double w) {
  double lo = kVEps;
  double hi = 1.0 - kVEps;
  double flo = c.cond_2given1(lo, u, Side::right);
  double fhi = c.cond_2given1(hi, u, Side::right);
  if (w <= flo) return lo;
  if (w >= fhi) return hi;
  while (hi - lo > kInvTol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = c.cond_2given1(mid, u, Side::right);
    if (fm < w) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

void SamplePairs::validate() const {
  if (rows.empty()) throw DomainError("SamplePairs: need at least one row");
  for (const auto& [x, y] : rows) {
    if (std::isnan(x) || std::isnan(y)) throw DomainError("SamplePairs: NaN entry");
  }
}

SamplePairs sample_copula(const Copula& c, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw DomainError("sample_copula: n must be >= 1");
  Rng rng(seed);
  SamplePairs out;
  out.rows.reserve(n);
  if (c.has_sampler()) {
    for (std::size_t i = 0; i < n; ++i) out.rows.push_back(c.sample(rng));
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng.uniform_open();
    const double w = rng.uniform_open();
    out.rows.emplace_back(u, invert_conditional(c, u, w));
  }
  return out;
}

PseudoObservations pseudo_observations(const SamplePairs& data) {
  data.validate();
  const std::size_t n = data.n();
  std::vector<std::size_t> idx(n);
  PseudoObservations out;
  out.rows.assign(n, {0.0, 0.0});

  // Stable sort keeps input order among ties.
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return data.rows[a].first < data.rows[b].first;
  });
  for (std::size_t r = 0; r < n; ++r) {
    out.rows[idx[r]].first = static_cast<double>(r + 1) / static_cast<double>(n + 1);
  }
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return data.rows[a].second < data.rows[b].second;
  });
  for (std::size_t r = 0; r < n; ++r) {
    out.rows[idx[r]].second = static_cast<double>(r + 1) / static_cast<double>(n + 1);
  }
  return out;
}

EmpiricalQdc empirical_qdc(const PseudoObservations& po, const QuantilePoint& pt,
                           double t, Direction dir) {
  if (!(t > 0.0) || t > 0.5) throw DomainError("empirical_qdc: t outside (0, 1/2]");
  const Interval ip = clamp_interval(pt.p.value(), t);
  const Interval iq = clamp_interval(pt.q.value(), t);
  const Interval& cond = dir == Direction::y_given_x ? ip : iq;

  std::size_t m = 0;
  std::size_t joint = 0;
  for (const auto& [u, v] : po.rows) {
    const double cu = dir == Direction::y_given_x ? u : v;
    const double ou = dir == Direction::y_given_x ? v : u;
    const Interval& other = dir == Direction::y_given_x ? iq : ip;
    if (cu > cond.lo && cu <= cond.hi) {
      ++m;
      if (ou > other.lo && ou <= other.hi) ++joint;
    }
  }
  if (m == 0) {
    throw EmptyConditioningSetError("empirical_qdc: no observations in the conditioning band");
  }
  return EmpiricalQdc{static_cast<double>(joint) / static_cast<double>(m), m};
}

double empirical_tail(const PseudoObservations& po, double t, TailSide which) {
  if (!(t > 0.0) || t > 0.5) throw DomainError("empirical_tail: t outside (0, 1/2]");
  std::size_t m = 0;
  std::size_t joint = 0;
  for (const auto& [u, v] : po.rows) {
    const bool cu = which == TailSide::lower ? u <= t : u > 1.0 - t;
    const bool cv = which == TailSide::lower ? v <= t : v > 1.0 - t;
    if (cu) {
      ++m;
      if (cv) ++joint;
    }
  }
  if (m == 0) {
    throw EmptyConditioningSetError("empirical_tail: no observations in the conditioning corner");
  }
  return static_cast<double>(joint) / static_cast<double>(m);
}

}  // namespace qdc
