#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "lorenz/metrics.hpp"
#include "lorenz/special_functions.hpp"

namespace lorenz {

/// Goodness-of-fit bundle for one actual-vs-estimated share comparison.
struct GofReport {
  double r_squared = 1.0;
  double mse = 0.0;
  double mae = 0.0;
  double mas = 0.0;  // maximum absolute error
  double iim = 0.0;  // information inaccuracy measure
  double ks_d = 0.0;
  double ks_p = 1.0;
  const char* ks_method = "stephens-asymptotic";
};

namespace detail {

inline void check_same_length(std::span<const double> a, std::span<const double> e) {
  if (a.empty() || a.size() != e.size())
    throw std::invalid_argument("gof: samples must be non-empty and of equal length");
}

}  // namespace detail

/// 1 - SSE/SST on the share vectors. Undefined (error) when the actual
/// shares are constant.
inline double r_squared(std::span<const double> actual, std::span<const double> estimated) {
  detail::check_same_length(actual, estimated);
  double mean = 0.0;
  for (double a : actual) mean += a;
  mean /= static_cast<double>(actual.size());
  double sse = 0.0, sst = 0.0;
  for (std::size_t i = 0; i < actual.size(); ++i) {
    sse += (actual[i] - estimated[i]) * (actual[i] - estimated[i]);
    sst += (actual[i] - mean) * (actual[i] - mean);
  }
  // Summation dust from genuinely constant inputs still counts as SST = 0.
  if (sst <= 1e-24)
    throw std::domain_error("r_squared: undefined for constant actual shares (SST = 0)");
  return 1.0 - sse / sst;
}

inline double mse(std::span<const double> actual, std::span<const double> estimated) {
  detail::check_same_length(actual, estimated);
  double sum = 0.0;
  for (std::size_t i = 0; i < actual.size(); ++i)
    sum += (actual[i] - estimated[i]) * (actual[i] - estimated[i]);
  return sum / static_cast<double>(actual.size());
}

inline double mae(std::span<const double> actual, std::span<const double> estimated) {
  detail::check_same_length(actual, estimated);
  double sum = 0.0;
  for (std::size_t i = 0; i < actual.size(); ++i) sum += std::abs(actual[i] - estimated[i]);
  return sum / static_cast<double>(actual.size());
}

inline double mas(std::span<const double> actual, std::span<const double> estimated) {
  detail::check_same_length(actual, estimated);
  double worst = 0.0;
  for (std::size_t i = 0; i < actual.size(); ++i)
    worst = std::max(worst, std::abs(actual[i] - estimated[i]));
  return worst;
}

/// Theil's information inaccuracy: sum_i actual_i * ln(actual_i / estimated_i).
/// Non-negative whenever both vectors are positive and normalized.
inline double iim(std::span<const double> actual, std::span<const double> estimated) {
  detail::check_same_length(actual, estimated);
  double sum = 0.0;
  for (std::size_t i = 0; i < actual.size(); ++i) {
    if (!(actual[i] > 0.0) || !(estimated[i] > 0.0))
      throw std::domain_error("iim: requires strictly positive shares");
    sum += actual[i] * std::log(actual[i] / estimated[i]);
  }
  return sum;
}

struct KsResult {
  double d = 0.0;
  double p = 1.0;
};

/// Two-sample Kolmogorov-Smirnov test. D is the supremum gap between the two
/// empirical CDFs; the p-value uses the asymptotic Kolmogorov distribution
/// with the Stephens small-sample correction
///   lambda = (sqrt(Ne) + 0.12 + 0.11/sqrt(Ne)) * D,  Ne = n*m/(n+m).
inline KsResult ks_two_sample(std::span<const double> sample_a, std::span<const double> sample_b) {
  if (sample_a.empty() || sample_b.empty())
    throw std::invalid_argument("ks_two_sample: samples must be non-empty");
  std::vector<double> a(sample_a.begin(), sample_a.end());
  std::vector<double> b(sample_b.begin(), sample_b.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  double fa = 0.0, fb = 0.0;
  while (i < a.size() && j < b.size()) {
    const double va = a[i];
    const double vb = b[j];
    if (va <= vb) fa = static_cast<double>(++i) / na;
    if (vb <= va) fb = static_cast<double>(++j) / nb;
    d = std::max(d, std::abs(fa - fb));
  }
  if (d == 0.0) return {0.0, 1.0};
  const double ne = na * nb / (na + nb);
  const double lambda = (std::sqrt(ne) + 0.12 + 0.11 / std::sqrt(ne)) * d;
  return {d, kolmogorov_q(lambda)};
}

/// All six statistics from one pair of decile share vectors.
inline GofReport full_report(const DecileShares& actual, const DecileShares& estimated) {
  GofReport report;
  report.r_squared = r_squared(actual.values, estimated.values);
  report.mse = mse(actual.values, estimated.values);
  report.mae = mae(actual.values, estimated.values);
  report.mas = mas(actual.values, estimated.values);
  report.iim = iim(actual.values, estimated.values);
  const KsResult ks = ks_two_sample(actual.values, estimated.values);
  report.ks_d = ks.d;
  report.ks_p = ks.p;
  return report;
}

}  // namespace lorenz
