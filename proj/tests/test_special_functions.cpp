#include "lorenz/special_functions.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "lorenz/quadrature.hpp"

TEST_CASE("log_gamma known values") {
  CHECK(lorenz::log_gamma(5.0) == Catch::Approx(std::log(24.0)).margin(1e-12));
  CHECK(lorenz::log_gamma(0.5) == Catch::Approx(0.5 * std::log(M_PI)).margin(1e-12));
  CHECK(lorenz::log_gamma(1.0) == Catch::Approx(0.0).margin(1e-13));
  CHECK(lorenz::log_gamma(2.0) == Catch::Approx(0.0).margin(1e-13));
  // 40-digit reference evaluation of ln Gamma(1.35).
  CHECK(lorenz::log_gamma(1.35) == Catch::Approx(-0.11524089735244513).margin(1e-13));
  CHECK_THROWS_AS(lorenz::log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(lorenz::log_gamma(-1.5), std::domain_error);
}

TEST_CASE("log_gamma tracks the library implementation on [0.5, 50]") {
  for (double x = 0.5; x <= 50.0; x += 0.25)
    CHECK(lorenz::log_gamma(x) == Catch::Approx(std::lgamma(x)).margin(1e-12));
}

TEST_CASE("log_gamma recurrence") {
  // Gamma(x + 1) = x Gamma(x)
  for (double x = 0.5; x <= 20.0; x += 0.375) {
    const double lhs = std::exp(lorenz::log_gamma(x + 1.0));
    const double rhs = x * std::exp(lorenz::log_gamma(x));
    CHECK(lhs == Catch::Approx(rhs).epsilon(1e-10));
  }
}

TEST_CASE("beta known values") {
  CHECK(lorenz::beta(2.0, 2.0) == Catch::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(lorenz::beta(1.0, 1.0) == Catch::Approx(1.0).epsilon(1e-12));
  // 40-digit reference value of B(1.9, 1.59).
  CHECK(lorenz::beta(1.9, 1.59) == Catch::Approx(0.261126047214587).epsilon(1e-10));
  CHECK_THROWS_AS(lorenz::beta(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(lorenz::beta(1.0, -2.0), std::domain_error);
}

TEST_CASE("beta agrees with its defining integral") {
  // Independent quadrature oracle: B(p, q) = integral of t^(p-1) (1-t)^(q-1).
  const auto oracle = [](double p, double q) {
    return lorenz::integrate(
        [p, q](double t) { return std::pow(t, p - 1.0) * std::pow(1.0 - t, q - 1.0); }, 0.0,
        1.0);
  };
  CHECK(lorenz::beta(1.9, 1.59) == Catch::Approx(oracle(1.9, 1.59)).epsilon(1e-10));
  CHECK(lorenz::beta(2.0, 1.35) == Catch::Approx(oracle(2.0, 1.35)).epsilon(1e-10));
  CHECK(lorenz::beta(3.5, 2.25) == Catch::Approx(oracle(3.5, 2.25)).epsilon(1e-10));
}

TEST_CASE("beta symmetry") {
  for (double p : {1.1, 1.9, 2.4, 5.0, 17.0})
    for (double q : {1.35, 1.59, 3.0, 8.5})
      CHECK(lorenz::beta(p, q) == Catch::Approx(lorenz::beta(q, p)).epsilon(1e-12));
}

TEST_CASE("kolmogorov_q values") {
  CHECK(lorenz::kolmogorov_q(0.0) == 1.0);
  CHECK(lorenz::kolmogorov_q(10.0) == Catch::Approx(0.0).margin(1e-12));
  // 40-digit reference summation of the series at the Cote d'Ivoire lambda.
  CHECK(lorenz::kolmogorov_q(0.481) == Catch::Approx(0.9748157183257382).margin(1e-9));
  CHECK_THROWS_AS(lorenz::kolmogorov_q(-0.1), std::domain_error);
}

TEST_CASE("kolmogorov_q agrees with direct series summation") {
  for (double lambda : {0.3, 0.481, 0.7, 1.0, 1.5, 2.2}) {
    double sum = 0.0;
    for (int j = 1; j <= 300; ++j)
      sum += (j % 2 == 1 ? 2.0 : -2.0) * std::exp(-2.0 * j * j * lambda * lambda);
    CHECK(lorenz::kolmogorov_q(lambda) == Catch::Approx(sum).margin(1e-10));
  }
}

TEST_CASE("kolmogorov_q is monotone non-increasing") {
  double prev = lorenz::kolmogorov_q(0.0);
  for (double lambda = 0.05; lambda <= 3.0 + 1e-9; lambda += 0.05) {
    const double q = lorenz::kolmogorov_q(lambda);
    CHECK(q <= prev + 1e-15);
    CHECK(q >= 0.0);
    CHECK(q <= 1.0);
    prev = q;
  }
}
