#include "lorenz/quadrature.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "lorenz/model.hpp"

using lorenz::QuadratureRule;

TEST_CASE("gauss-legendre rule invariants") {
  for (int order : {4, 16, 31, 32, 64}) {
    const QuadratureRule rule = QuadratureRule::gauss_legendre(order);
    REQUIRE(rule.order() == order);
    double wsum = 0.0;
    for (double w : rule.weights) {
      REQUIRE(w > 0.0);
      wsum += w;
    }
    CHECK(wsum == Catch::Approx(2.0).margin(1e-12));
    for (int i = 0; i + 1 < order; ++i) CHECK(rule.nodes[i] < rule.nodes[i + 1]);
    for (int i = 0; i < order; ++i) {
      CHECK(rule.nodes[i] > -1.0);
      CHECK(rule.nodes[i] < 1.0);
      CHECK(rule.nodes[i] + rule.nodes[order - 1 - i] == Catch::Approx(0.0).margin(1e-12));
    }
  }
  CHECK_THROWS_AS(QuadratureRule::gauss_legendre(0), std::invalid_argument);
}

TEST_CASE("polynomial exactness up to rule degree") {
  // A 32-point rule is exact through degree 63.
  const auto poly = [](int degree) { return [degree](double x) { return std::pow(x, degree); }; };
  for (int degree : {0, 1, 5, 20, 63}) {
    const double exact = 1.0 / (degree + 1);
    CHECK(lorenz::integrate(poly(degree), 0.0, 1.0) == Catch::Approx(exact).margin(1e-14));
    CHECK(lorenz::integrate(poly(degree), 0.0, 1.0, 3) == Catch::Approx(exact).margin(1e-14));
  }
}

TEST_CASE("integrate basics") {
  CHECK(lorenz::integrate([](double x) { return x * x; }, 0.0, 1.0) ==
        Catch::Approx(1.0 / 3.0).margin(1e-15));
  CHECK(lorenz::integrate([](double) { return 1.0; }, 0.0, 1.0) ==
        Catch::Approx(1.0).margin(1e-15));
  CHECK(lorenz::integrate([](double x) { return std::cos(x); }, 0.0, 2.0) ==
        Catch::Approx(std::sin(2.0)).margin(1e-14));
  CHECK(lorenz::integrate([](double x) { return x; }, 1.0, 1.0) == 0.0);
}

TEST_CASE("weighted lorenz area equals 1/(p+1)") {
  const lorenz::WeightedParams params{1.805, 0.47};
  const double area =
      lorenz::integrate([&](double x) { return lorenz::eval_weighted(params, x); }, 0.0, 1.0);
  CHECK(area == Catch::Approx(1.0 / 2.805).margin(1e-9));
}

TEST_CASE("integrate error handling") {
  CHECK_THROWS_AS(lorenz::integrate([](double) { return 1.0; }, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(lorenz::integrate([](double) { return 1.0; }, 0.0, 1.0, 0),
                  std::invalid_argument);
  try {
    lorenz::integrate([](double x) { return 1.0 / (x - x); }, 0.0, 1.0, 1);
    FAIL("expected domain_error");
  } catch (const std::domain_error& err) {
    // The diagnostic names the offending abscissa.
    CHECK(std::string(err.what()).find("x = ") != std::string::npos);
  }
}
