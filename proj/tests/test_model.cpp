#include "lorenz/model.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <random>

using lorenz::KakwaniParams;
using lorenz::LorenzCurve;
using lorenz::WeightedParams;

TEST_CASE("weighted evaluation") {
  CHECK(lorenz::eval_weighted({2.0, 0.0}, 0.5) == Catch::Approx(0.25).margin(1e-15));
  CHECK(lorenz::eval_weighted({2.0, 1.0}, 0.75) == Catch::Approx(0.5).margin(1e-15));
  // Malta, simple-method parameters rounded as published.
  CHECK(lorenz::eval_weighted({1.805, 0.47}, 0.1) == Catch::Approx(0.0349).margin(5e-4));
  for (const WeightedParams params : {WeightedParams{1.0, 0.0}, WeightedParams{2.4, 0.52},
                                      WeightedParams{7.0, 1.0}}) {
    CHECK(lorenz::eval_weighted(params, 0.0) == 0.0);
    CHECK(lorenz::eval_weighted(params, 1.0) == 1.0);
  }
  CHECK_THROWS_AS(lorenz::eval_weighted({2.0, 0.5}, -0.1), std::domain_error);
  CHECK_THROWS_AS(lorenz::eval_weighted({2.0, 0.5}, 1.1), std::domain_error);
  CHECK_THROWS_AS(lorenz::eval_weighted({0.9, 0.5}, 0.5), std::domain_error);
  CHECK_THROWS_AS(lorenz::eval_weighted({2.0, 1.5}, 0.5), std::domain_error);
}

TEST_CASE("weighted special parameter reductions") {
  for (double x = 0.05; x < 1.0; x += 0.05) {
    CHECK(lorenz::eval_weighted({2.4, 0.0}, x) == Catch::Approx(std::pow(x, 2.4)).margin(1e-15));
    CHECK(lorenz::eval_weighted({2.4, 1.0}, x) ==
          Catch::Approx(1.0 - std::pow(1.0 - x, 1.0 / 2.4)).margin(1e-15));
    // p = 1 collapses both base curves to the diagonal, for every k.
    for (double k : {0.0, 0.3, 0.5, 1.0})
      CHECK(lorenz::eval_weighted({1.0, k}, x) == Catch::Approx(x).margin(1e-15));
  }
}

TEST_CASE("kakwani evaluation") {
  // Malta, Kakwani parameters as published.
  CHECK(lorenz::eval_kakwani({0.55, 0.90, 0.59}, 0.1) == Catch::Approx(0.0350).margin(5e-4));
  CHECK(lorenz::eval_kakwani({0.55, 0.90, 0.59}, 0.0) == 0.0);
  CHECK(lorenz::eval_kakwani({0.55, 0.90, 0.59}, 1.0) == 1.0);
  CHECK(lorenz::eval_kakwani({1e-12, 0.5, 0.5}, 0.3) == Catch::Approx(0.3).margin(1e-9));
  CHECK_THROWS_AS(lorenz::eval_kakwani({0.55, 0.9, 0.59}, 1.5), std::domain_error);
  CHECK_THROWS_AS(lorenz::eval_kakwani({-0.1, 0.9, 0.59}, 0.5), std::domain_error);
  CHECK_THROWS_AS(lorenz::eval_kakwani({0.5, 1.2, 0.59}, 0.5), std::domain_error);
}

TEST_CASE("weighted derivative") {
  CHECK(lorenz::weighted_derivative({1.0, 0.0}, 0.5) == Catch::Approx(1.0).margin(1e-15));
  CHECK(lorenz::weighted_derivative({2.0, 0.0}, 0.5) == Catch::Approx(1.0).margin(1e-15));
  CHECK_THROWS_AS(lorenz::weighted_derivative({2.0, 0.5}, 0.0), std::domain_error);
  CHECK_THROWS_AS(lorenz::weighted_derivative({2.0, 0.5}, 1.0), std::domain_error);
}

TEST_CASE("derivative matches central finite differences") {
  const double h = 1e-6;
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const WeightedParams params{1.0 + 6.0 * unit(rng), unit(rng)};
    const double x = 0.37;
    const double fd = (lorenz::eval_weighted(params, x + h) -
                       lorenz::eval_weighted(params, x - h)) / (2.0 * h);
    CHECK(lorenz::weighted_derivative(params, x) == Catch::Approx(fd).epsilon(1e-6));
    CHECK(lorenz::weighted_derivative(params, x) >= 0.0);
  }
}

TEST_CASE("weighted curve stays under the diagonal and convex") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    const WeightedParams params{1.0 + 9.0 * unit(rng), unit(rng)};
    double prev = 0.0, prev_diff = 0.0;
    for (int i = 1; i <= 200; ++i) {
      const double x = static_cast<double>(i) / 200.0;
      const double y = lorenz::eval_weighted(params, x);
      CHECK(y >= 0.0);
      CHECK(y <= x + 1e-15);
      const double diff = y - prev;
      CHECK(diff >= -1e-12);
      if (i > 1) CHECK(diff - prev_diff >= -1e-12);
      prev = y;
      prev_diff = diff;
    }
  }
}

TEST_CASE("kakwani curve stays under the diagonal") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const KakwaniParams params{0.05 + 1.2 * unit(rng), 0.3 + 0.7 * unit(rng),
                               0.3 + 0.7 * unit(rng)};
    for (double x = 0.05; x < 1.0; x += 0.05)
      CHECK(lorenz::eval_kakwani(params, x) <= x + 1e-15);
  }
}

TEST_CASE("lorenz validity verdicts") {
  CHECK(lorenz::is_valid_lorenz(LorenzCurve(WeightedParams{1.805, 0.47})).valid);
  CHECK(lorenz::is_valid_lorenz(LorenzCurve(KakwaniParams{0.94, 1.00, 0.35})).valid);

  const auto verdict = lorenz::is_valid_lorenz(LorenzCurve(KakwaniParams{5.0, 1.0, 1.0}));
  CHECK_FALSE(verdict.valid);
  CHECK(verdict.reason == "not non-decreasing");
  CHECK(verdict.location > 0.0);
  CHECK(verdict.location < 0.5);
}

TEST_CASE("weighted validity across the parameter box") {
  for (double p : {1.0, 1.2, 1.81, 2.4, 3.88, 10.0, 50.0})
    for (double k : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const auto verdict = lorenz::is_valid_lorenz(LorenzCurve(WeightedParams{p, k}));
      INFO("p = " << p << ", k = " << k << ": " << verdict.reason);
      CHECK(verdict.valid);
    }
}

TEST_CASE("curve variant dispatch") {
  const LorenzCurve weighted(WeightedParams{2.0, 0.5});
  const LorenzCurve kakwani(KakwaniParams{0.55, 0.90, 0.59});
  CHECK(weighted.is_weighted());
  CHECK_FALSE(kakwani.is_weighted());
  CHECK(weighted.weighted() != nullptr);
  CHECK(weighted.kakwani() == nullptr);
  CHECK(weighted(0.5) == lorenz::eval_weighted({2.0, 0.5}, 0.5));
  CHECK(kakwani(0.5) == lorenz::eval_kakwani({0.55, 0.90, 0.59}, 0.5));
}
