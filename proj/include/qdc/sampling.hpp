#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qdc/copula.hpp"
#include "qdc/unit_interval.hpp"

namespace qdc {

struct SamplePairs {
  std::vector<std::pair<double, double>> rows;

  std::size_t n() const { return rows.size(); }
  void validate() const;  // n >= 1, no NaN
};

// Normalized ranks i/(n+1); both margins are exactly {1/(n+1), ..., n/(n+1)}.
struct PseudoObservations {
  std::vector<std::pair<double, double>> rows;

  std::size_t n() const { return rows.size(); }
};

// n iid draws from the copula, on the copula (u,v) scale.  Uses a dedicated
// sampler when the family carries one, otherwise conditional inversion:
// u ~ U(0,1) and v solves C_{2|1}(v|u) = w by bracketed bisection (tol 1e-10).
// Deterministic for a fixed seed.
SamplePairs sample_copula(const Copula& c, std::size_t n, std::uint64_t seed);

PseudoObservations pseudo_observations(const SamplePairs& data);

struct EmpiricalQdc {
  double value;
  std::size_t count_conditioning;
};

// Finite-bandwidth plug-in for the quantile dependence coefficient: the
// conditional relative frequency of the q-band event given the p-band event.
// Throws EmptyConditioningSetError when no observation conditions.
EmpiricalQdc empirical_qdc(const PseudoObservations& po, const QuantilePoint& pt,
                           double t, Direction dir);

enum class TailSide { lower, upper };

double empirical_tail(const PseudoObservations& po, double t, TailSide which);

}  // namespace qdc
