#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace lorenz {

/// Coefficients and stopping rules for the downhill simplex search.
struct SimplexConfig {
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  int max_iterations = 5000;
  double spread_tolerance = 1e-12;
  int restarts = 1;

  void validate() const {
    if (!(reflection > 0.0)) throw std::invalid_argument("simplex: reflection must be > 0");
    if (!(expansion > 1.0)) throw std::invalid_argument("simplex: expansion must be > 1");
    if (!(contraction > 0.0 && contraction < 1.0))
      throw std::invalid_argument("simplex: contraction must be in (0, 1)");
    if (!(shrink > 0.0 && shrink < 1.0))
      throw std::invalid_argument("simplex: shrink must be in (0, 1)");
    if (!(spread_tolerance > 0.0))
      throw std::invalid_argument("simplex: spread_tolerance must be > 0");
    if (max_iterations < 1) throw std::invalid_argument("simplex: max_iterations must be >= 1");
    if (restarts < 0) throw std::invalid_argument("simplex: restarts must be >= 0");
  }
};

struct MinimizeResult {
  std::vector<double> argmin;
  double objective_value = 0.0;
  int iterations = 0;
  bool converged = false;
};

namespace detail {

template <class F>
double guarded_eval(F&& objective, const std::vector<double>& x) {
  const double v = objective(x);
  // Non-finite values reject the move rather than poisoning the simplex.
  return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
}

template <class F>
MinimizeResult simplex_run(F&& objective, const std::vector<double>& start,
                           const SimplexConfig& cfg, int* iterations_used) {
  const std::size_t n = start.size();
  std::vector<std::vector<double>> pts(n + 1, start);
  std::vector<double> fv(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    double& c = pts[i + 1][i];
    c = (c != 0.0) ? c * 1.05 : 0.00025;  // fminsearch-style deterministic seed
  }
  for (std::size_t i = 0; i <= n; ++i) fv[i] = guarded_eval(objective, pts[i]);

  std::vector<std::size_t> idx(n + 1);
  bool converged = false;
  int iter = 0;
  for (; iter < cfg.max_iterations; ++iter) {
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    const double fbest = fv[idx.front()];
    const double fworst = fv[idx.back()];
    // Fractional spread; collapses to zero once the simplex sits on the minimum.
    const double spread =
        2.0 * std::abs(fworst - fbest) / (std::abs(fworst) + std::abs(fbest) + 1e-300);
    if (spread <= cfg.spread_tolerance) {
      converged = true;
      break;
    }

    const std::size_t worst = idx.back();
    const std::size_t second = idx[n - 1];
    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t d = 0; d < n; ++d) centroid[d] += pts[i][d];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    auto blend = [&](double t) {
      std::vector<double> p(n);
      for (std::size_t d = 0; d < n; ++d) p[d] = centroid[d] + t * (centroid[d] - pts[worst][d]);
      return p;
    };

    const std::vector<double> xr = blend(cfg.reflection);
    const double fr = guarded_eval(objective, xr);
    if (fr < fv[idx.front()]) {
      const std::vector<double> xe = blend(cfg.reflection * cfg.expansion);
      const double fe = guarded_eval(objective, xe);
      if (fe < fr) {
        pts[worst] = xe;
        fv[worst] = fe;
      } else {
        pts[worst] = xr;
        fv[worst] = fr;
      }
      continue;
    }
    if (fr < fv[second]) {
      pts[worst] = xr;
      fv[worst] = fr;
      continue;
    }
    if (fr < fv[worst]) {
      const std::vector<double> xc = blend(cfg.reflection * cfg.contraction);
      const double fc = guarded_eval(objective, xc);
      if (fc <= fr) {
        pts[worst] = xc;
        fv[worst] = fc;
        continue;
      }
    } else {
      const std::vector<double> xc = blend(-cfg.contraction);
      const double fc = guarded_eval(objective, xc);
      if (fc < fv[worst]) {
        pts[worst] = xc;
        fv[worst] = fc;
        continue;
      }
    }
    // Shrink toward the best vertex.
    const std::size_t best = idx.front();
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t d = 0; d < n; ++d)
        pts[i][d] = pts[best][d] + cfg.shrink * (pts[i][d] - pts[best][d]);
      fv[i] = guarded_eval(objective, pts[i]);
    }
  }
  *iterations_used = iter;

  std::size_t best = 0;
  for (std::size_t i = 1; i <= n; ++i)
    if (fv[i] < fv[best]) best = i;
  return MinimizeResult{pts[best], fv[best], iter, converged};
}

}  // namespace detail

/// Bounded-free downhill simplex (Nelder-Mead) minimization.
///
/// Deterministic: the initial simplex is seeded from `initial` by a 5%
/// per-coordinate step (0.00025 for zero coordinates) and ties never depend
/// on evaluation order. Non-finite objective values during the search are
/// treated as +infinity; a non-finite value at the initial point is an error.
template <class F>
MinimizeResult nelder_mead(F&& objective, const std::vector<double>& initial,
                           const SimplexConfig& config = {}) {
  config.validate();
  if (initial.empty()) throw std::invalid_argument("nelder_mead: dimension must be >= 1");
  const double f0 = objective(initial);
  if (!std::isfinite(f0))
    throw std::domain_error("nelder_mead: objective is not finite at the initial point");

  MinimizeResult result;
  result.argmin = initial;
  result.objective_value = f0;
  std::vector<double> start = initial;
  for (int run = 0; run <= config.restarts; ++run) {
    int used = 0;
    MinimizeResult r = detail::simplex_run(objective, start, config, &used);
    result.iterations += used;
    result.converged = r.converged;
    if (r.objective_value <= result.objective_value) {
      result.argmin = std::move(r.argmin);
      result.objective_value = r.objective_value;
    }
    start = result.argmin;
  }
  return result;
}

}  // namespace lorenz
