#pragma once

#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "lorenz/model.hpp"

namespace lorenz {

/// Income shares of the bottom and top m-fraction of the population.
///
/// `ratio` optionally carries the published bottom/top ratio when it is known
/// at higher precision than the rounded shares themselves (income databases
/// and the tables built from them round the shares to 3-4 digits while the
/// ratio column preserves the unrounded quotient).
struct TailShareObservation {
  double m = 0.10;
  double bottom_share = 0.0;
  double top_share = 0.0;
  std::optional<double> ratio;

  double effective_ratio() const { return ratio ? *ratio : bottom_share / top_share; }

  void validate() const {
    if (!(m > 0.0 && m < 0.5))
      throw std::domain_error("tail observation: m must be in (0, 0.5)");
    if (!(bottom_share > 0.0 && top_share > 0.0 && bottom_share < top_share && top_share < 1.0))
      throw std::domain_error(
          "tail observation: requires 0 < bottom_share < top_share < 1 for m < 0.5");
    if (!(bottom_share + top_share < 1.0))
      throw std::domain_error("tail observation: bottom_share + top_share must be < 1");
    if (ratio && !(*ratio > 0.0))
      throw std::domain_error("tail observation: ratio must be > 0");
  }
};

/// The four powers entering the tail-ratio identity, for given p and m:
/// a = m^p, b = (1-m)^(1/p), c = n^p, d = (1-n)^(1/p) with n = 1-m.
struct RatioCoefficients {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double ratio = 0.0;
};

struct SimpleEstimate {
  WeightedParams params;
  bool degenerate = false;  // p == 1: every k gives the diagonal
  bool clamped = false;     // raw k fell outside [0, 1] and was clamped
};

/// Raised when the recovered k falls outside [0, 1]; carries the raw value so
/// the caller can decide to clamp.
class KOutOfRangeError : public std::domain_error {
 public:
  KOutOfRangeError(double raw, const std::string& msg) : std::domain_error(msg), raw_(raw) {}
  double raw_value() const { return raw_; }

 private:
  double raw_;
};

/// p = (1 + gini) / (1 - gini); strictly increasing on [0, 1).
inline double p_from_gini(double gini) {
  if (!(gini >= 0.0 && gini < 1.0))
    throw std::domain_error("p_from_gini: requires 0 <= gini < 1");
  return (1.0 + gini) / (1.0 - gini);
}

/// Exact inverse of p_from_gini: gini = (p - 1) / (p + 1).
inline double gini_from_p(double p) {
  if (!(p >= 1.0)) throw std::domain_error("gini_from_p: requires p >= 1");
  return (p - 1.0) / (p + 1.0);
}

inline RatioCoefficients ratio_coefficients(double p, double m) {
  if (!(p >= 1.0)) throw std::domain_error("ratio_coefficients: requires p >= 1");
  if (!(m > 0.0 && m < 0.5))
    throw std::domain_error("ratio_coefficients: requires m in (0, 0.5)");
  const double n = 1.0 - m;
  RatioCoefficients c;
  c.a = std::pow(m, p);
  c.b = std::pow(1.0 - m, 1.0 / p);
  c.c = std::pow(n, p);
  c.d = std::pow(1.0 - n, 1.0 / p);
  return c;
}

/// Solves the tail-ratio identity for k given p, m and the observed ratio.
/// The returned k plugged back into the forward model reproduces the ratio to
/// 1e-10. Out-of-range solutions raise KOutOfRangeError with the raw value.
inline double k_from_ratio(double p, double m, double ratio) {
  if (!(ratio > 0.0)) throw std::domain_error("k_from_ratio: requires ratio > 0");
  const RatioCoefficients rc = ratio_coefficients(p, m);
  const double numerator = rc.a - ratio + rc.c * ratio;
  const double denominator = rc.c * ratio - ratio + rc.d * ratio + rc.a + rc.b - 1.0;
  if (std::abs(denominator) < 1e-12) {
    std::ostringstream msg;
    msg << "k_from_ratio: degenerate configuration (denominator " << denominator
        << "); at p = 1 every k yields the diagonal";
    throw std::domain_error(msg.str());
  }
  const double k = numerator / denominator;
  if (k < 0.0 || k > 1.0) {
    std::ostringstream msg;
    msg << "k_from_ratio: recovered k = " << k
        << " lies outside [0, 1]; the observed ratio is inconsistent with the functional form";
    throw KOutOfRangeError(k, msg.str());
  }
  return k;
}

/// Full simple-method estimate: p from the Gini index, k from the tail-share
/// ratio. No error minimization involved. Only the bottom/top ratio is
/// matched; the individual shares need not be reproduced.
inline SimpleEstimate estimate_simple(double gini, const TailShareObservation& observation,
                                      bool clamp = false) {
  observation.validate();
  const double p = p_from_gini(gini);
  if (p - 1.0 < 1e-12) {
    // Perfect equality: the curve is the diagonal for every k.
    return SimpleEstimate{WeightedParams{1.0, 0.5}, true, false};
  }
  try {
    const double k = k_from_ratio(p, observation.m, observation.effective_ratio());
    return SimpleEstimate{WeightedParams{p, k}, false, false};
  } catch (const KOutOfRangeError& err) {
    if (!clamp) throw;
    const double k = err.raw_value() < 0.0 ? 0.0 : 1.0;
    return SimpleEstimate{WeightedParams{p, k}, false, true};
  }
}

}  // namespace lorenz
