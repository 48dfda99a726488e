#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "diamaug/metric.hpp"
#include "diamaug/path_opt.hpp"
#include "diamaug/unicyclic.hpp"
#include "diamaug/wspd.hpp"

namespace diamaug {

/// Parameter split for the (1+eps) approximation: eps/60 controls the
/// clustering granularity, eps/32 the well-separation constant.
struct ApproxConfig {
  double eps = 0.0;
  double eps1 = 0.0;
  double eps2 = 0.0;
  int window_count = 0;

  double separation() const { return 1.0 / eps2; }

  static ApproxConfig from_eps(double eps) {
    if (!(eps > 0.0) || !(eps < 1.0))
      throw std::invalid_argument("approx: eps must lie in (0, 1)");
    ApproxConfig cfg;
    cfg.eps = eps;
    cfg.eps1 = eps / 60.0;
    cfg.eps2 = eps / 32.0;
    cfg.window_count = static_cast<int>(std::ceil(1.0 / cfg.eps1));
    return cfg;
  }
};

/// One representative vertex per occupied length-(eps1 * |P|) window of path
/// coordinates: the smallest-index vertex in each. The coordinates double as
/// the prefix sums of the representative path, since its edges weigh the
/// path distance between consecutive representatives.
struct RepresentativePath {
  std::vector<int> positions;  // strictly increasing path positions
  std::vector<double> coords;  // prefix coordinate of each representative
};

inline RepresentativePath build_representatives(const PathInstance& path,
                                                const ApproxConfig& cfg) {
  if (path.size() < 2) throw std::invalid_argument("approx: need at least two vertices");
  const double total = path.length();
  if (!(total > 0.0)) throw std::invalid_argument("approx: zero-length path");
  const double window = cfg.eps1 * total;
  RepresentativePath rep;
  int last_window = -1;
  for (int v = 0; v < path.size(); ++v) {
    // The final vertex lands exactly on the right edge; fold it into the
    // last window so every vertex belongs somewhere.
    int idx = static_cast<int>(std::floor(path.prefix(v) / window));
    idx = std::min(idx, cfg.window_count - 1);
    if (idx > last_window) {
      rep.positions.push_back(v);
      rep.coords.push_back(path.prefix(v));
      last_window = idx;
    }
  }
  return rep;
}

/// (1+eps)-approximate minimum-diameter shortcut for a coordinate-embedded
/// path: evaluates one candidate per well-separated pair of representatives
/// on the representative path, then re-evaluates the winner exactly on the
/// full path. O(n + 1/eps^3).
inline OptResult approx_optimal_shortcut(const PathInstance& path, double eps) {
  const ApproxConfig cfg = ApproxConfig::from_eps(eps);
  if (!path.metric().has_coordinates())
    throw std::invalid_argument("approx: requires a coordinate-backed metric");
  const double total = path.length();
  OptResult res;
  res.original_diameter = total;
  if (total == 0.0 || path.size() < 3) {
    res.diameter = total;
    return res;
  }

  const RepresentativePath rep = build_representatives(path, cfg);
  if (rep.positions.size() < 2) {
    res.diameter = total;
    return res;
  }
  const SplitTree tree = build_split_tree(rep.coords);
  const std::vector<WspdPair> pairs = compute_wspd(tree, cfg.separation());

  double best_value = std::numeric_limits<double>::infinity();
  int best_a = -1, best_b = -1;
  double best_weight = 0.0;
  for (const WspdPair& p : pairs) {
    int i = p.rep_a, j = p.rep_b;
    if (i > j) std::swap(i, j);
    const int a = rep.positions[static_cast<std::size_t>(i)];
    const int b = rep.positions[static_cast<std::size_t>(j)];
    if (b == a + 1) continue;  // an existing edge; adding it changes nothing
    const double w = path.metric_distance(a, b);
    const double value = diameter_with_shortcut_prefix(rep.coords, i, j, w);
    if (value < best_value ||
        (value == best_value && (a < best_a || (a == best_a && b < best_b)))) {
      best_value = value;
      best_a = a;
      best_b = b;
      best_weight = w;
    }
  }
  res.iterations = static_cast<int>(pairs.size());
  if (best_a < 0) {
    res.diameter = total;
    return res;
  }
  const Shortcut sc{best_a, best_b, best_weight};
  res.shortcut = sc;
  res.diameter = path_diameter_with_shortcut(path, sc);
  return res;
}

}  // namespace diamaug
