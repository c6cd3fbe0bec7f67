// Property suites for the structural results: convex combinations, survival
// and reflection symmetries, the finite-bandwidth sum bound, boundary caps,
// continuity in the mixing weight, and the jointly symmetric special case.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "qdc/families.hpp"
#include "qdc/quantile_dependence.hpp"
#include "qdc/registry.hpp"

using namespace qdc;

namespace {

const LimitSchedule kDefault{};

double vol(const Copula& c, double p, double q) {
  return qdc_volume(c, QuantilePoint::of(p, q), Direction::y_given_x, kDefault).value;
}

double closed(const Copula& c, double p, double q) {
  auto est = qdc_closed_form(c, QuantilePoint::of(p, q), Direction::y_given_x);
  REQUIRE(est.has_value());
  return est->value;
}

}  // namespace

TEST_CASE("convexity of the coefficient in the mixing weight") {
  const Copula m = make_frechet_upper();
  const Copula w = make_frechet_lower();
  const std::vector<std::pair<double, double>> pts = {
      {0.3, 0.3}, {0.3, 0.7}, {0.5, 0.5}, {0.2, 0.6}, {0.0, 1.0}};
  for (double omega : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const Copula mix = convex_mix(m, w, UnitValue(omega));
    for (auto [p, q] : pts) {
      const double expect = omega * closed(m, p, q) + (1.0 - omega) * closed(w, p, q);
      CHECK(closed(mix, p, q) == doctest::Approx(expect).epsilon(1e-15));
    }
  }
  // Numeric route agrees at a few representative points.
  const Copula mix = convex_mix(m, w, UnitValue(0.25));
  CHECK(vol(mix, 0.3, 0.3) == doctest::Approx(0.25).epsilon(1e-3));
  CHECK(vol(mix, 0.3, 0.7) == doctest::Approx(0.75).epsilon(1e-3));
  CHECK(vol(mix, 0.25, 0.5) == doctest::Approx(0.0).epsilon(1e-3));
}

TEST_CASE("survival symmetry: lambda of the survival copula mirrors both bands") {
  for (const char* name : {"shuffle3", "archimedean-ex8"}) {
    const Copula c = make_family(parse_family_spec(
        name, std::string(name) == "archimedean-ex8" ? "theta=0.5" : ""));
    const Copula sc = survival(c);
    for (double p : {0.15, 0.4, 0.65}) {
      for (double q : {0.2, 0.45, 0.8}) {
        CHECK(std::fabs(vol(sc, p, q) - vol(c, 1.0 - p, 1.0 - q)) < 1e-3);
      }
    }
  }
}

TEST_CASE("reflection symmetry") {
  for (const char* name : {"shuffle3", "cuadras-auge"}) {
    const Copula c = make_family(parse_family_spec(
        name, std::string(name) == "cuadras-auge" ? "theta=0.6" : ""));
    const Copula cv = reflect_v(c);
    const Copula cu = reflect_u(c);
    for (double p : {0.2, 0.5, 0.7}) {
      for (double q : {0.3, 0.5, 0.75}) {
        CHECK(std::fabs(vol(cv, p, q) - vol(c, p, 1.0 - q)) < 1e-3);
        CHECK(std::fabs(vol(cu, p, q) - vol(c, 1.0 - p, q)) < 1e-3);
      }
    }
  }
}

TEST_CASE("sum bound at finite bandwidth") {
  // For t < |q - q0|/2 the two q-bands are disjoint, so the finite-t ratios
  // already sum to at most one.
  const std::vector<Copula> cs = {make_frechet_upper(), make_shuffle(),
                                  make_cuadras_auge(0.5), make_archimedean_ex8(0.5)};
  const double p0 = 0.4;
  const double q0 = 0.4;
  const double q1 = 0.7;
  for (const Copula& c : cs) {
    for (double t : {0.1, 0.05, 0.01, 0.002}) {
      if (t >= 0.5 * std::fabs(q1 - q0)) continue;
      const Interval ip = clamp_interval(p0, t);
      const Interval iq0 = clamp_interval(q0, t);
      const Interval iq1 = clamp_interval(q1, t);
      const double r0 = c_volume_raw(c, ip.lo, ip.hi, iq0.lo, iq0.hi) / ip.width();
      const double r1 = c_volume_raw(c, ip.lo, ip.hi, iq1.lo, iq1.hi) / ip.width();
      CHECK(r0 + r1 <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("boundary caps: lambda(q|p) <= 1/2 for q on the boundary, p interior") {
  struct Entry {
    const char* name;
    const char* params;
  };
  const Entry entries[] = {
      {"independence", ""},     {"frechet-upper", ""},
      {"frechet-lower", ""},    {"cuadras-auge", "theta=0.5"},
      {"ev-flat", "theta=0.7"}, {"archimedean-ex8", "theta=0.5"},
      {"clayton", "alpha=2"},   {"gumbel", "alpha=2"},
      {"shuffle3", ""},         {"gaussian", "rho=0.5"},
      {"student-t", "rho=0.5,nu=3"}, {"regression", "beta0=0,beta1=1"},
  };
  for (const auto& e : entries) {
    CAPTURE(e.name);
    const Copula c = make_family(parse_family_spec(e.name, e.params));
    for (double p : {0.25, 0.5, 0.75}) {
      for (double q : {0.0, 1.0}) {
        CHECK(vol(c, p, q) <= 0.5 + 1e-3);
      }
    }
  }
}

TEST_CASE("continuity in the mixing weight") {
  const Copula m = make_frechet_upper();
  const Copula w = make_frechet_lower();
  const double p = 0.3;  // lambda(p|p) of the mix equals omega for p != 1/2
  double prev_err = 1.0;
  for (double omega : {0.6, 0.66, 0.666, 2.0 / 3.0}) {
    const Copula mix = convex_mix(m, w, UnitValue(omega));
    const double lam = closed(mix, p, p);
    CHECK(lam == doctest::Approx(omega).epsilon(1e-15));
    const double err = std::fabs(lam - 2.0 / 3.0);
    CHECK(err <= prev_err + 1e-15);
    prev_err = err;
  }
}

TEST_CASE("jointly symmetric mix: all four reflected coefficients coincide") {
  const Copula a = convex_mix(make_frechet_upper(), make_frechet_lower(), UnitValue(0.5));
  for (double p : {0.1, 0.3, 0.45, 0.8}) {
    for (double q : {0.2, 0.5, 0.7, 0.9}) {
      const double base = closed(a, p, q);
      CHECK(closed(a, p, 1.0 - q) == doctest::Approx(base).epsilon(1e-15));
      CHECK(closed(a, 1.0 - p, q) == doctest::Approx(base).epsilon(1e-15));
      CHECK(closed(a, 1.0 - p, 1.0 - q) == doctest::Approx(base).epsilon(1e-15));
    }
    if (p != 0.5) {
      CHECK(closed(a, p, p) == doctest::Approx(0.5).epsilon(1e-15));
    }
  }
}
