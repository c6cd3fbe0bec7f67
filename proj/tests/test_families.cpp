#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "copula_checks.hpp"
#include "qdc/families.hpp"
#include "qdc/registry.hpp"
#include "qdc/special_functions.hpp"

using namespace qdc;
using qdc_test::grid_report;

namespace {

// Example 8's copula in its explicit piecewise form; the library builds the
// same object from the generator, so this is an independent oracle.
double ex8_cdf_oracle(double u, double v, double th) {
  const double a = 0.5 * th;
  const double r = th / (2.0 - th);
  const double s0 = (2.0 - th) / th;
  if (u <= 0.0 || v <= 0.0) return 0.0;
  if (u >= 1.0) return v;
  if (v >= 1.0) return u;
  if (u <= a && v >= a && s0 * (th - u) + (1.0 - v) <= 2.0 - th) return u - r * (1.0 - v);
  if (v <= a && u >= a && s0 * (th - v) + (1.0 - u) <= 2.0 - th) return v - r * (1.0 - u);
  if (u >= a && v >= a && u + v - 1.0 <= a) return r * (u + v - th);
  if (u >= a && v >= a && u + v - 1.0 >= a) return u + v - 1.0;
  return 0.0;
}

}  // namespace

TEST_CASE("Frechet bounds and product") {
  CHECK(make_frechet_upper().cdf(0.3, 0.7) == 0.3);
  CHECK(make_frechet_lower().cdf(0.3, 0.7) == 0.0);
  CHECK(make_product().cdf(0.3, 0.7) == doctest::Approx(0.21).epsilon(1e-15));
}

TEST_CASE("validity gate: every registry family satisfies the copula axioms") {
  struct Entry {
    const char* name;
    const char* params;
    double tol;
  };
  // Analytic families at 1e-12; quadrature-backed cdfs at 1e-8; the
  // tabulated regression marginal at 1e-6.
  const Entry entries[] = {
      {"independence", "", 1e-12},
      {"frechet-upper", "", 1e-12},
      {"frechet-lower", "", 1e-12},
      {"cuadras-auge", "theta=0.5", 1e-12},
      {"ev-flat", "theta=0.7", 1e-12},
      {"archimedean-ex8", "theta=0.5", 1e-12},
      {"clayton", "alpha=2", 1e-12},
      {"gumbel", "alpha=2", 1e-12},
      {"shuffle3", "", 1e-12},
      {"mix", "omega=0.6667", 1e-12},
      {"gaussian", "rho=0.5", 1e-8},
      {"gaussian", "rho=-0.9", 1e-8},
      {"student-t", "rho=0.5,nu=3", 1e-8},
      {"student-t", "rho=0,nu=1", 1e-8},
      {"regression", "beta0=0,beta1=1", 1e-6},
  };
  for (const auto& e : entries) {
    CAPTURE(e.name);
    CAPTURE(e.params);
    const Copula c = make_family(parse_family_spec(e.name, e.params));
    const auto rep = grid_report(c);
    CHECK(rep.max_grounded <= e.tol);
    CHECK(rep.max_margin <= e.tol);
    CHECK(rep.min_volume >= -e.tol);
    CHECK(rep.max_frechet <= e.tol);
  }
}

TEST_CASE("gaussian copula values") {
  const Copula g0 = make_gaussian({0.0});
  CHECK(g0.cdf(0.3, 0.7) == doctest::Approx(0.21).epsilon(1e-12));

  const Copula g = make_gaussian({0.5});
  CHECK(g.cond_2given1(0.5, 0.5, Side::right) == doctest::Approx(0.5).epsilon(1e-12));
  // Median identity for elliptical copulas: C(1/2,1/2) = 1/4 + asin(rho)/2pi.
  for (double rho : {0.5, -0.3, 0.9}) {
    const Copula c = make_gaussian({rho});
    CHECK(c.cdf(0.5, 0.5) ==
          doctest::Approx(0.25 + std::asin(rho) / (2.0 * 3.141592653589793)).epsilon(1e-9));
  }
  CHECK(g.cdf(0.3, 0.7) == doctest::Approx(0.2669038488674).epsilon(1e-9));
  CHECK(make_gaussian({-0.3}).cdf(0.2, 0.4) == doctest::Approx(0.0485168385019).epsilon(1e-9));
  for (int i = 1; i < 10; ++i) {
    CHECK(g.cdf(i / 10.0, 1.0) == doctest::Approx(i / 10.0).epsilon(1e-9));
  }
  // rho endpoints route to the Frechet bounds.
  CHECK(make_gaussian({1.0}).cdf(0.3, 0.8) == 0.3);
  CHECK(make_gaussian({-1.0}).cdf(0.3, 0.8) == doctest::Approx(0.1).epsilon(1e-15));
}

TEST_CASE("student t copula values") {
  const Copula t1 = make_student_t({0.0, 1});
  // Sign-quadrant argument: C(1/2,1/2) = 1/4 exactly for rho = 0, any nu.
  CHECK(t1.cdf(0.5, 0.5) == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(t1.cdf(0.3, 0.7) == doctest::Approx(0.1938561060950).epsilon(1e-9));
  const Copula t3 = make_student_t({0.5, 3});
  CHECK(t3.cdf(0.5, 0.5) ==
        doctest::Approx(0.25 + std::asin(0.5) / (2.0 * 3.141592653589793)).epsilon(1e-9));
  for (int i = 1; i < 10; ++i) {
    CHECK(t1.cdf(i / 10.0, 1.0) == doctest::Approx(i / 10.0).epsilon(1e-9));
  }
  // Corner closed forms against the exact T_{nu+1} expressions.
  auto corner = [](const Copula& c, double p, double q) {
    return *c.closed_form_qdc(p, q, Direction::y_given_x);
  };
  CHECK(corner(t1, 0.0, 0.0) == doctest::Approx(0.29289321881345226).epsilon(1e-12));
  CHECK(corner(t3, 0.0, 0.0) == doctest::Approx(0.3125).epsilon(1e-12));
  CHECK(corner(t3, 0.0, 1.0) == doctest::Approx(0.025721420742506534).epsilon(1e-12));
  CHECK(corner(t3, 0.3, 0.4) == 0.0);
}

TEST_CASE("extreme-value constructors") {
  const Copula pi_like = make_ev(PickandsFunction::independence());
  const Copula m_like = make_ev(PickandsFunction::comonotone());
  const Copula ca = make_cuadras_auge(0.5);
  for (int i = 0; i <= 10; ++i) {
    for (int j = 0; j <= 10; ++j) {
      const double u = i / 10.0, v = j / 10.0;
      CHECK(pi_like.cdf(u, v) == doctest::Approx(u * v).epsilon(1e-14));
      CHECK(m_like.cdf(u, v) == doctest::Approx(std::min(u, v)).epsilon(1e-14));
      // Example 6 cross-check: EV route equals min(u,v)^theta (uv)^{1-theta}.
      const double direct =
          std::pow(std::min(u, v), 0.5) * std::pow(u * v, 0.5);
      CHECK(ca.cdf(u, v) == doctest::Approx(direct).epsilon(1e-12));
    }
  }
  CHECK(ca.cdf(0.4, 0.9) == doctest::Approx(0.3794733192202056).epsilon(1e-12));
}

TEST_CASE("archimedean constructors") {
  const Copula cl = make_clayton(2.0);
  CHECK(cl.cdf(0.5, 0.5) == doctest::Approx(1.0 / std::sqrt(7.0)).epsilon(1e-14));

  // theta = 1 reduces the two-slope family to W.
  const Copula w_like = make_archimedean_ex8(1.0);
  const Copula w = make_frechet_lower();
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      const double u = i / 20.0, v = j / 20.0;
      CHECK(w_like.cdf(u, v) == doctest::Approx(w.cdf(u, v)).epsilon(1e-14));
    }
  }

  // Generator route equals the explicit piecewise display.
  for (double th : {0.25, 0.5, 0.75}) {
    const Copula c = make_archimedean_ex8(th);
    for (int i = 0; i <= 20; ++i) {
      for (int j = 0; j <= 20; ++j) {
        const double u = i / 20.0, v = j / 20.0;
        CHECK(c.cdf(u, v) == doctest::Approx(ex8_cdf_oracle(u, v, th)).epsilon(1e-14));
      }
    }
  }

  // Exchangeability is exact for Archimedean cdfs.
  std::mt19937 gen(3);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const Copula gu = make_gumbel(2.0);
  for (int i = 0; i < 50; ++i) {
    const double u = unif(gen), v = unif(gen);
    CHECK(cl.cdf(u, v) == cl.cdf(v, u));
    CHECK(gu.cdf(u, v) == gu.cdf(v, u));
  }
}

TEST_CASE("shuffle copula branches and margins") {
  const Copula sh = make_shuffle();
  CHECK(sh.cdf(0.1, 0.9) == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(sh.cdf(0.5, 0.3) == doctest::Approx(0.1).epsilon(1e-15));
  for (int i = 1; i < 10; ++i) {
    CHECK(sh.cdf(i / 10.0, 1.0) == doctest::Approx(i / 10.0).epsilon(1e-15));
  }
}

TEST_CASE("regression model marginal cdf") {
  const RegressionModel m(0.0, 1.0);
  // G is a symmetric cdf: G(-y) = 1 - G(y).
  for (double y : {0.1, 0.5, 1.0, 2.5, 6.0}) {
    CHECK(m.g_exact(-y) == doctest::Approx(1.0 - m.g_exact(y)).epsilon(1e-11));
    CHECK(m.g_cdf(y) == doctest::Approx(m.g_exact(y)).epsilon(5e-5));
  }
  CHECK(m.g_exact(0.0) == 0.5);
  // Inverse round trip through the polished inverse.
  for (double v : {0.5001, 0.52, 0.75, 0.95, 0.9999, 0.25, 0.03}) {
    CHECK(m.g_exact(m.g_inv(v)) == doctest::Approx(v).epsilon(1e-10));
  }
}

TEST_CASE("regression copula: margins and beta0 invariance") {
  const Copula c = make_regression_model(0.0, 1.0);
  for (int i = 1; i < 10; ++i) {
    const double u = i / 10.0;
    CHECK(c.cdf(u, 1.0) == doctest::Approx(u).epsilon(1e-9));
    CHECK(std::fabs(c.cdf(1.0, u) - u) < 1e-6);  // exercises G^{-1}
  }
  // The copula never depends on beta0.
  const Copula c0 = make_regression_model(0.0, 0.0);
  const Copula c1 = make_regression_model(1.0, 0.0);
  const Copula c5 = make_regression_model(5.0, 0.0);
  for (int i = 1; i < 6; ++i) {
    for (int j = 1; j < 6; ++j) {
      const double u = i / 6.0, v = j / 6.0;
      const double base = c0.cdf(u, v);
      CHECK(c1.cdf(u, v) == doctest::Approx(base).epsilon(1e-8));
      CHECK(c5.cdf(u, v) == doctest::Approx(base).epsilon(1e-8));
    }
  }
}

TEST_CASE("registry validation") {
  CHECK_THROWS_AS(make_family(parse_family_spec("nope", "")), DomainError);
  CHECK_THROWS_AS(make_family(parse_family_spec("gaussian", "rho=1.5")), DomainError);
  CHECK_THROWS_AS(make_family(parse_family_spec("gaussian", "")), DomainError);
  CHECK_THROWS_AS(make_family(parse_family_spec("gaussian", "rho=0.5,bogus=1")), DomainError);
  CHECK_THROWS_AS(make_family(parse_family_spec("student-t", "rho=0,nu=2.5")), DomainError);
  CHECK_THROWS_AS(parse_family_spec("gaussian", "rho=abc"), DomainError);

  // Nested mix parameters reach the children.
  const Copula mixed = make_family(parse_family_spec(
      "mix", "omega=0.5,left=gaussian,left.rho=0,right=frechet-lower"));
  CHECK(mixed.cdf(0.5, 0.5) == doctest::Approx(0.5 * 0.25).epsilon(1e-9));
}
