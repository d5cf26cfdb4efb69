#pragma once

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace lorenz {

/// Parameters of the weighted exponential/Pareto Lorenz curve
///   y(x) = (1-k) x^p + k (1 - (1-x)^(1/p)),  p >= 1,  0 <= k <= 1.
/// p alone fixes the Gini index; k shifts income between the tails while
/// keeping the Gini constant.
struct WeightedParams {
  double p = 1.0;
  double k = 0.0;

  bool in_bounds() const { return p >= 1.0 && k >= 0.0 && k <= 1.0; }
  void validate() const {
    if (!in_bounds()) {
      std::ostringstream msg;
      msg << "weighted params out of bounds: p = " << p << " (requires p >= 1), k = " << k
          << " (requires 0 <= k <= 1)";
      throw std::domain_error(msg.str());
    }
  }
};

/// Parameters of the Kakwani Lorenz curve
///   y(x) = x - a x^alpha (1-x)^beta,  a > 0,  0 < alpha <= 1,  0 < beta <= 1.
/// The box constraints alone do not guarantee a valid Lorenz curve; see
/// is_valid_lorenz for the certified check.
struct KakwaniParams {
  double a = 0.0;
  double alpha = 1.0;
  double beta = 1.0;

  bool in_bounds() const {
    return a > 0.0 && alpha > 0.0 && alpha <= 1.0 && beta > 0.0 && beta <= 1.0;
  }
  void validate() const {
    if (!in_bounds()) {
      std::ostringstream msg;
      msg << "kakwani params out of bounds: a = " << a << " (requires a > 0), alpha = " << alpha
          << ", beta = " << beta << " (require 0 < alpha, beta <= 1)";
      throw std::domain_error(msg.str());
    }
  }
};

namespace detail {

inline void check_unit_interval(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream msg;
    msg << "curve evaluation requires x in [0, 1], got x = " << x;
    throw std::domain_error(msg.str());
  }
}

}  // namespace detail

/// y(x) for the weighted model. Endpoints are returned exactly.
inline double eval_weighted(const WeightedParams& params, double x) {
  params.validate();
  detail::check_unit_interval(x);
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  return (1.0 - params.k) * std::pow(x, params.p) +
         params.k * (1.0 - std::pow(1.0 - x, 1.0 / params.p));
}

/// y(x) for the Kakwani model. Endpoints are returned exactly.
inline double eval_kakwani(const KakwaniParams& params, double x) {
  params.validate();
  detail::check_unit_interval(x);
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  return x - params.a * std::pow(x, params.alpha) * std::pow(1.0 - x, params.beta);
}

/// dy/dx of the weighted model on (0, 1).
inline double weighted_derivative(const WeightedParams& params, double x) {
  params.validate();
  if (!(x > 0.0 && x < 1.0))
    throw std::domain_error("weighted_derivative: requires x in (0, 1)");
  return (1.0 - params.k) * params.p * std::pow(x, params.p - 1.0) +
         (params.k / params.p) * std::pow(1.0 - x, 1.0 / params.p - 1.0);
}

/// One Lorenz curve of either functional form, with uniform evaluation.
class LorenzCurve {
 public:
  LorenzCurve(WeightedParams params) : form_(params) { params.validate(); }
  LorenzCurve(KakwaniParams params) : form_(params) { params.validate(); }

  double operator()(double x) const {
    if (const auto* w = std::get_if<WeightedParams>(&form_)) return eval_weighted(*w, x);
    return eval_kakwani(std::get<KakwaniParams>(form_), x);
  }

  bool is_weighted() const { return std::holds_alternative<WeightedParams>(form_); }
  const WeightedParams* weighted() const { return std::get_if<WeightedParams>(&form_); }
  const KakwaniParams* kakwani() const { return std::get_if<KakwaniParams>(&form_); }

 private:
  std::variant<WeightedParams, KakwaniParams> form_;
};

/// Verdict of the Lorenz-validity scan; `location` is the x of the first
/// violation when invalid.
struct ValidityVerdict {
  bool valid = true;
  std::string reason;
  double location = 0.0;

  explicit operator bool() const { return valid; }
};

/// Certifies y(0) = 0, y(1) = 1 and non-decreasing, convex behaviour via
/// successive differences on a uniform grid of 1001 interior points
/// (tolerance -1e-12). The weighted form is analytically valid for every
/// in-bounds parameter pair and always passes; Kakwani curves with large `a`
/// fail here even though they satisfy the box constraints.
inline ValidityVerdict is_valid_lorenz(const LorenzCurve& curve) {
  constexpr int kInterior = 1001;
  constexpr double kTol = -1e-12;
  if (curve(0.0) != 0.0) return {false, "y(0) != 0", 0.0};
  if (curve(1.0) != 1.0) return {false, "y(1) != 1", 1.0};
  std::vector<double> y(kInterior);
  std::vector<double> xs(kInterior);
  for (int i = 0; i < kInterior; ++i) {
    xs[i] = static_cast<double>(i + 1) / (kInterior + 1);
    y[i] = curve(xs[i]);
  }
  for (int i = 0; i + 1 < kInterior; ++i) {
    if (y[i + 1] - y[i] < kTol) return {false, "not non-decreasing", xs[i + 1]};
  }
  for (int i = 0; i + 2 < kInterior; ++i) {
    if ((y[i + 2] - y[i + 1]) - (y[i + 1] - y[i]) < kTol) return {false, "not convex", xs[i + 1]};
  }
  return {};
}

}  // namespace lorenz
