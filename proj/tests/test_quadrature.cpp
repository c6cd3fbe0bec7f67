#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qdc/errors.hpp"
#include "qdc/interp.hpp"
#include "qdc/quadrature.hpp"

using namespace qdc;

TEST_CASE("polynomial and trigonometric integrals") {
  CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(integrate([](double x) { return std::sin(x); }, 0.0, 3.141592653589793) ==
        doctest::Approx(2.0).epsilon(1e-13));
  CHECK(integrate([](double x) { return std::exp(-x * x); }, 0.0, 8.0) ==
        doctest::Approx(0.5 * std::sqrt(3.141592653589793)).epsilon(1e-13));
  CHECK(integrate([](double) { return 1.0; }, 2.0, 2.0) == 0.0);
}

TEST_CASE("integrable endpoint singularity") {
  QuadratureOptions opt;
  opt.abs_tol = 1e-9;
  opt.max_panels = 16384;
  const double v = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, opt);
  CHECK(v == doctest::Approx(2.0).epsilon(1e-7));
}

TEST_CASE("breakpoints let kinked integrands converge quickly") {
  QuadratureOptions opt;
  opt.breakpoints = {0.3};
  const double v = integrate([](double x) { return std::fabs(x - 0.3); }, 0.0, 1.0, opt);
  // int |x - 0.3| = 0.3^2/2 + 0.7^2/2
  CHECK(v == doctest::Approx(0.045 + 0.245).epsilon(1e-14));
}

TEST_CASE("monotone cubic interpolation reproduces nodes and stays monotone") {
  std::vector<double> xs, ys;
  for (int i = 0; i <= 30; ++i) {
    const double x = -2.0 + i * (4.0 / 30.0);
    xs.push_back(x);
    ys.push_back(std::tanh(x));
  }
  MonotoneCubic f(xs, ys);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(f(xs[i]) == doctest::Approx(ys[i]).epsilon(1e-15));
  }
  double prev = f(-2.0);
  for (int i = 1; i <= 400; ++i) {
    const double x = -2.0 + i * (4.0 / 400.0);
    const double y = f(x);
    CHECK(y >= prev - 1e-15);
    CHECK(std::fabs(y - std::tanh(x)) < 2e-4);
    prev = y;
  }
  // Inverse round trip.
  for (double y : {-0.9, -0.25, 0.0, 0.6, 0.95}) {
    CHECK(f(f.inverse(y)) == doctest::Approx(y).epsilon(1e-10));
  }
}

TEST_CASE("interp rejects bad input") {
  CHECK_THROWS_AS(MonotoneCubic({0.0, 0.0, 1.0}, {0.0, 0.5, 1.0}), DomainError);
  CHECK_THROWS_AS(MonotoneCubic({0.0}, {0.0}), DomainError);
}
