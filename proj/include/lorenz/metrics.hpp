#pragma once

#include <array>
#include <cmath>
#include <numeric>
#include <utility>

#include "lorenz/model.hpp"
#include "lorenz/quadrature.hpp"
#include "lorenz/special_functions.hpp"

namespace lorenz {

/// Income shares of the ten population deciles, D1 (poorest) to D10.
struct DecileShares {
  std::array<double, 10> values{};

  double sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }
  double operator[](std::size_t i) const { return values[i]; }
  double& operator[](std::size_t i) { return values[i]; }
};

enum class GiniMethod { closed_form, quadrature, beta_function, grouped };

struct GiniValue {
  double value = 0.0;
  GiniMethod method = GiniMethod::closed_form;
};

/// Gini of the weighted model in closed form: (p - 1) / (p + 1).
/// Independent of k.
inline GiniValue gini_weighted_closed(const WeightedParams& params) {
  params.validate();
  return {(params.p - 1.0) / (params.p + 1.0), GiniMethod::closed_form};
}

/// Gini = 1 - 2 * area under the curve, by quadrature. Works for any curve;
/// agrees with the closed forms to better than 1e-8.
inline GiniValue gini_quadrature(const LorenzCurve& curve) {
  const double area = integrate([&](double x) { return curve(x); }, 0.0, 1.0);
  return {1.0 - 2.0 * area, GiniMethod::quadrature};
}

/// Kakwani Gini in terms of the beta function: 2 a B(alpha+1, beta+1).
inline GiniValue gini_kakwani_beta(const KakwaniParams& params) {
  params.validate();
  return {2.0 * params.a * beta(params.alpha + 1.0, params.beta + 1.0),
          GiniMethod::beta_function};
}

/// Gini from grouped decile data alone: trapezoid rule over the 11 cumulative
/// points (0, 0), (i/10, cumsum_i). This is the estimate grouped-data sources
/// support without a fitted curve, and it underestimates the curve's exact
/// Gini because the trapezoids overestimate the area under a convex curve.
inline GiniValue gini_grouped(const DecileShares& shares) {
  double cumulative = 0.0;
  double twice_area = 0.0;  // sum of (y_{i-1} + y_i) * dx, dx = 1/10
  for (double share : shares.values) {
    twice_area += (2.0 * cumulative + share) * 0.1;
    cumulative += share;
  }
  return {1.0 - twice_area, GiniMethod::grouped};
}

/// share_i = y(i/10) - y((i-1)/10).
inline DecileShares decile_shares(const LorenzCurve& curve) {
  DecileShares shares;
  double prev = 0.0;
  for (int i = 1; i <= 10; ++i) {
    const double y = curve(static_cast<double>(i) / 10.0);
    shares[i - 1] = y - prev;
    prev = y;
  }
  return shares;
}

/// {B_m, T_m}: bottom share y(m) and top share 1 - y(1-m).
inline std::pair<double, double> tail_shares(const LorenzCurve& curve, double m) {
  if (!(m > 0.0 && m < 1.0)) throw std::domain_error("tail_shares: requires m in (0, 1)");
  return {curve(m), 1.0 - curve(1.0 - m)};
}

}  // namespace lorenz
