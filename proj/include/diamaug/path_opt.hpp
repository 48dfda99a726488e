#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

#include "diamaug/decision.hpp"
#include "diamaug/metric.hpp"
#include "diamaug/unicyclic.hpp"

namespace diamaug {

struct OptResult {
  std::optional<Shortcut> shortcut;
  double diameter = 0.0;           // exact value of the returned shortcut
  double original_diameter = 0.0;  // path length / tree diameter
  int iterations = 0;              // decision calls or candidate evaluations
  std::pair<double, double> lambda_bracket{0.0, 0.0};
};

/// Minimum-diameter shortcut by bisection over the decision procedure.
/// Maintains decide(hi) feasible and lo infeasible until the bracket closes
/// to rel_tol * |P|; the result is the last feasible shortcut, re-evaluated
/// exactly, so the reported diameter exceeds the optimum by at most the
/// bracket width. The optional polish pass additionally evaluates one exact
/// diameter per first endpoint at the final feasible lambda and keeps the
/// best (O(n^2) worst case).
inline OptResult optimal_shortcut(const PathInstance& path, double rel_tol = 1e-12,
                                  int max_iter = 200, int threads = 1,
                                  bool polish = false) {
  if (path.size() < 3)
    throw std::invalid_argument("optimize: no augmenting non-edge exists for n < 3");
  if (!(rel_tol > 0.0)) throw std::invalid_argument("optimize: rel_tol must be positive");
  const double total = path.length();
  OptResult res;
  res.original_diameter = total;
  if (total == 0.0) {
    res.diameter = 0.0;
    return res;
  }

  double hi = total;
  double lo = 0.0;  // the diameter stays positive whenever the path has length
  int iterations = 1;
  std::optional<Shortcut> best = decide_shortcut(path, hi, threads);
  if (!best) {
    res.diameter = total;
    res.iterations = iterations;
    res.lambda_bracket = {lo, hi};
    return res;
  }
  while (hi - lo > rel_tol * total && iterations < max_iter) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo) || !(mid < hi)) break;  // bracket exhausted in doubles
    ++iterations;
    if (auto found = decide_shortcut(path, mid, threads)) {
      best = std::move(found);
      hi = mid;
    } else {
      lo = mid;
    }
  }

  res.shortcut = best;
  res.diameter = path_diameter_with_shortcut(path, *best);
  res.iterations = iterations;
  res.lambda_bracket = {lo, hi};

  if (polish) {
    const DecisionContext ctx = build_context(path, hi);
    for (int k = 0; k + 2 < path.size(); ++k) {
      auto interval = feasible_interval(ctx, k);
      if (!interval) continue;
      const int l = std::max(interval->lo, k + 2);
      if (l > interval->hi) continue;
      const Shortcut candidate{k, l, path.metric_distance(k, l)};
      const double value = path_diameter_with_shortcut(path, candidate);
      if (value < res.diameter) {
        res.diameter = value;
        res.shortcut = candidate;
      }
    }
  }
  return res;
}

}  // namespace diamaug
