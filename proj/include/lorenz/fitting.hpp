#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lorenz/metrics.hpp"
#include "lorenz/model.hpp"
#include "lorenz/nelder_mead.hpp"

namespace lorenz {

struct LorenzPoint {
  double x = 0.0;
  double y = 0.0;
};

/// Interior Lorenz-curve ordinates used as the fit target. The constructor
/// drops the trivial endpoints (0,0) and (1,1), which both functional forms
/// satisfy identically, and validates ordering and the under-diagonal
/// property.
class LorenzPoints {
 public:
  explicit LorenzPoints(std::vector<LorenzPoint> pts) {
    for (const LorenzPoint& p : pts) {
      if (std::abs(p.x) < 1e-12 && std::abs(p.y) < 1e-12) continue;
      if (std::abs(p.x - 1.0) < 1e-12 && std::abs(p.y - 1.0) < 1e-12) continue;
      points_.push_back(p);
    }
    validate();
  }

  const std::vector<LorenzPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

 private:
  void validate() const {
    double prev_x = 0.0, prev_y = -1e-12;
    for (const LorenzPoint& p : points_) {
      if (!(p.x > 0.0 && p.x < 1.0))
        throw std::invalid_argument("lorenz points: interior x must lie in (0, 1)");
      if (!(p.x > prev_x)) throw std::invalid_argument("lorenz points: x must be strictly increasing");
      if (p.y < prev_y - 1e-12)
        throw std::invalid_argument("lorenz points: y must be non-decreasing");
      if (p.y > p.x + 1e-9)
        throw std::invalid_argument("lorenz points: y must not exceed x (curve under diagonal)");
      if (p.y < -1e-12) throw std::invalid_argument("lorenz points: y must be non-negative");
      prev_x = p.x;
      prev_y = p.y;
    }
  }

  std::vector<LorenzPoint> points_;
};

/// Cumulates ten decile shares into the nine interior ordinates
/// (i/10, sum of the first i shares).
inline LorenzPoints points_from_decile_shares(const DecileShares& shares) {
  const double total = shares.sum();
  if (std::abs(total - 1.0) > 1e-2) {
    std::ostringstream msg;
    msg << "decile shares sum to " << total << ", expected 1";
    throw std::invalid_argument(msg.str());
  }
  std::vector<LorenzPoint> pts;
  pts.reserve(9);
  double cum = 0.0;
  for (int i = 0; i < 9; ++i) {
    cum += shares[i];
    pts.push_back({static_cast<double>(i + 1) / 10.0, cum});
  }
  return LorenzPoints(std::move(pts));
}

/// Error sum of squares of a curve against the points.
inline double sse_objective(const LorenzCurve& curve, const LorenzPoints& points) {
  double sse = 0.0;
  for (const LorenzPoint& p : points.points()) {
    const double r = p.y - curve(p.x);
    sse += r * r;
  }
  return sse;
}

enum class FitObjective {
  cumulative,  // ordinates at the nine interior deciles (default)
  shares,      // the ten per-decile shares
};

template <class Params>
struct FitResult {
  Params params{};
  double sse = 0.0;
  double r_squared = 1.0;
  bool converged = false;
  int starts_tried = 0;
};

template <class Params>
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(FitResult<Params> best, const std::string& msg)
      : std::runtime_error(msg), best_(std::move(best)) {}
  const FitResult<Params>& best() const { return best_; }

 private:
  FitResult<Params> best_;
};

/// No multi-start candidate produced a curve passing the validity scan.
class NoValidFitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline double logistic(double v) { return 1.0 / (1.0 + std::exp(-v)); }
inline double logit(double x) { return std::log(x / (1.0 - x)); }

inline double weighted_y(double p, double k, double x) {
  return (1.0 - k) * std::pow(x, p) + k * (1.0 - std::pow(1.0 - x, 1.0 / p));
}

inline double kakwani_y(double a, double alpha, double b, double x) {
  return x - a * std::pow(x, alpha) * std::pow(1.0 - x, b);
}

// SSE targets: either the raw points, or deciles recovered from them.
struct FitTargets {
  std::vector<double> xs;       // cumulative objective abscissae
  std::vector<double> ys;       // cumulative objective ordinates
  std::vector<double> shares;   // share objective targets (empty unless used)
  FitObjective objective = FitObjective::cumulative;

  double variance_sum() const {
    const std::vector<double>& t = objective == FitObjective::shares ? shares : ys;
    double mean = 0.0;
    for (double v : t) mean += v;
    mean /= static_cast<double>(t.size());
    double sst = 0.0;
    for (double v : t) sst += (v - mean) * (v - mean);
    return sst;
  }
};

template <class Eval>
double targets_sse(const FitTargets& t, Eval&& y_of_x) {
  double sse = 0.0;
  if (t.objective == FitObjective::shares) {
    double prev = 0.0;
    std::size_t i = 0;
    for (int d = 1; d <= 10; ++d) {
      const double y = d == 10 ? 1.0 : y_of_x(static_cast<double>(d) / 10.0);
      const double r = t.shares[i++] - (y - prev);
      sse += r * r;
      prev = y;
    }
  } else {
    for (std::size_t i = 0; i < t.xs.size(); ++i) {
      const double r = t.ys[i] - y_of_x(t.xs[i]);
      sse += r * r;
    }
  }
  return sse;
}

inline FitTargets cumulative_targets(const LorenzPoints& points) {
  FitTargets t;
  for (const LorenzPoint& p : points.points()) {
    t.xs.push_back(p.x);
    t.ys.push_back(p.y);
  }
  return t;
}

inline FitTargets share_targets(const DecileShares& shares) {
  FitTargets t;
  t.objective = FitObjective::shares;
  t.shares.assign(shares.values.begin(), shares.values.end());
  return t;
}

template <class Params>
FitResult<Params> finish_result(Params params, const FitTargets& targets, bool converged,
                                int starts_tried) {
  FitResult<Params> result;
  result.params = params;
  result.sse = targets_sse(targets, [&](double x) { return LorenzCurve(params)(x); });
  const double sst = targets.variance_sum();
  result.r_squared = sst > 0.0 ? 1.0 - result.sse / sst : (result.sse == 0.0 ? 1.0 : 0.0);
  result.converged = converged;
  result.starts_tried = starts_tried;
  return result;
}

inline FitResult<WeightedParams> fit_weighted_targets(
    const FitTargets& targets, const SimplexConfig& config,
    const std::vector<WeightedParams>& extra_starts) {
  auto objective = [&](const std::vector<double>& v) {
    const double p = 1.0 + std::exp(v[0]);
    const double k = logistic(v[1]);
    return targets_sse(targets, [&](double x) { return weighted_y(p, k, x); });
  };

  std::vector<WeightedParams> starts;
  for (double p : {1.2, 2.0, 4.0})
    for (double k : {0.2, 0.5, 0.8}) starts.push_back({p, k});
  for (const WeightedParams& s : extra_starts) {
    // Interior representative for boundary or degenerate suggestions.
    const double p = std::max(s.p, 1.0 + 1e-8);
    const double k = std::min(std::max(s.k, 1e-8), 1.0 - 1e-8);
    starts.push_back({p, k});
  }

  std::optional<MinimizeResult> best;
  bool any_converged = false;
  for (const WeightedParams& s : starts) {
    MinimizeResult r = nelder_mead(objective, {std::log(s.p - 1.0), logit(s.k)}, config);
    any_converged = any_converged || r.converged;
    // Ties go to the earliest start, keeping the reduction deterministic.
    if (!best || r.objective_value < best->objective_value) best = std::move(r);
  }
  const WeightedParams params{1.0 + std::exp(best->argmin[0]), logistic(best->argmin[1])};
  FitResult<WeightedParams> result = finish_result(params, targets, best->converged,
                                                   static_cast<int>(starts.size()));
  if (!any_converged)
    throw NonConvergenceError<WeightedParams>(result, "weighted fit: no start converged");
  return result;
}

inline FitResult<KakwaniParams> fit_kakwani_targets(const FitTargets& targets,
                                                    const SimplexConfig& config) {
  constexpr double kAlphaBound = 1.0;
  struct Candidate {
    KakwaniParams params;
    double sse;
    bool converged;
  };
  std::vector<Candidate> candidates;

  auto run = [&](const std::vector<double>& start, auto&& to_params) {
    auto objective = [&](const std::vector<double>& v) {
      const KakwaniParams q = to_params(v);
      return targets_sse(targets,
                         [&](double x) { return kakwani_y(q.a, q.alpha, q.beta, x); });
    };
    MinimizeResult r = nelder_mead(objective, start, config);
    candidates.push_back({to_params(r.argmin), r.objective_value, r.converged});
  };

  // Free fit over (a, alpha, beta).
  for (double a : {0.3, 0.7, 1.2})
    for (double alpha : {0.5, 0.9})
      for (double b : {0.3, 0.7})
        run({std::log(a), logit(alpha), logit(b)}, [](const std::vector<double>& v) {
          return KakwaniParams{std::exp(v[0]), logistic(v[1]), logistic(v[2])};
        });
  // The logistic never reaches 1, so the boundary cases are probed as
  // pinned sub-fits.
  for (double a : {0.3, 0.7, 1.2})
    for (double b : {0.3, 0.7})
      run({std::log(a), logit(b)}, [](const std::vector<double>& v) {
        return KakwaniParams{std::exp(v[0]), kAlphaBound, logistic(v[1])};
      });
  for (double a : {0.3, 0.7, 1.2})
    for (double alpha : {0.5, 0.9})
      run({std::log(a), logit(alpha)}, [](const std::vector<double>& v) {
        return KakwaniParams{std::exp(v[0]), logistic(v[1]), kAlphaBound};
      });
  for (double a : {0.3, 0.7, 1.2})
    run({std::log(a)}, [](const std::vector<double>& v) {
      return KakwaniParams{std::exp(v[0]), kAlphaBound, kAlphaBound};
    });

  const Candidate* best = nullptr;
  bool any_valid_converged = false;
  for (const Candidate& c : candidates) {
    if (!c.params.in_bounds() || !is_valid_lorenz(LorenzCurve(c.params))) continue;
    any_valid_converged = any_valid_converged || c.converged;
    if (!best || c.sse < best->sse) best = &c;
  }
  if (!best) throw NoValidFitError("kakwani fit: no start produced a valid Lorenz curve");
  FitResult<KakwaniParams> result = finish_result(best->params, targets, best->converged,
                                                  static_cast<int>(candidates.size()));
  if (!any_valid_converged)
    throw NonConvergenceError<KakwaniParams>(result, "kakwani fit: no valid start converged");
  return result;
}

}  // namespace detail

/// Least-squares fit of the weighted model to interior Lorenz ordinates.
/// Deterministic multi-start (3x3 grid plus any extra starts, e.g. the
/// simple-method estimate); the bounded search runs on smooth transforms
/// p = 1 + exp(u), k = logistic(v).
inline FitResult<WeightedParams> fit_weighted(
    const LorenzPoints& points, const SimplexConfig& config = {},
    const std::vector<WeightedParams>& extra_starts = {}) {
  if (points.size() < 3)
    throw std::invalid_argument("fit_weighted: requires at least 3 points");
  return detail::fit_weighted_targets(detail::cumulative_targets(points), config, extra_starts);
}

/// Same fit driven by decile shares, with a choice of objective.
inline FitResult<WeightedParams> fit_weighted(
    const DecileShares& shares, FitObjective objective, const SimplexConfig& config = {},
    const std::vector<WeightedParams>& extra_starts = {}) {
  if (objective == FitObjective::cumulative)
    return fit_weighted(points_from_decile_shares(shares), config, extra_starts);
  return detail::fit_weighted_targets(detail::share_targets(shares), config, extra_starts);
}

/// Least-squares Kakwani fit. Free (a, alpha, beta) starts plus sub-fits with
/// alpha and/or beta pinned at 1; only parameter sets passing the Lorenz
/// validity scan are eligible, and the lowest-SSE valid one wins.
inline FitResult<KakwaniParams> fit_kakwani(const LorenzPoints& points,
                                            const SimplexConfig& config = {}) {
  if (points.size() < 4)
    throw std::invalid_argument("fit_kakwani: requires at least 4 points");
  return detail::fit_kakwani_targets(detail::cumulative_targets(points), config);
}

inline FitResult<KakwaniParams> fit_kakwani(const DecileShares& shares, FitObjective objective,
                                            const SimplexConfig& config = {}) {
  if (objective == FitObjective::cumulative)
    return fit_kakwani(points_from_decile_shares(shares), config);
  return detail::fit_kakwani_targets(detail::share_targets(shares), config);
}

}  // namespace lorenz
