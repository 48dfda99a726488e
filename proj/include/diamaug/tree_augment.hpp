#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "diamaug/decision.hpp"
#include "diamaug/metric.hpp"
#include "diamaug/path_opt.hpp"
#include "diamaug/unicyclic.hpp"

namespace diamaug {

namespace detail {

struct TreeSweep {
  std::vector<double> dist;
  std::vector<int> parent;
  int farthest = -1;
  double radius = 0.0;
};

// Distances and parents from `start` by iterative DFS, skipping `banned`
// (pass -1 for none) and any edge rejected by `edge_ok`. Unreached vertices
// keep dist = -1. Ties for the farthest vertex go to the smaller id.
template <typename EdgeOk>
TreeSweep tree_sweep(const TreeInstance& tree, int start, int banned, EdgeOk edge_ok) {
  const int n = tree.size();
  TreeSweep sweep;
  sweep.dist.assign(static_cast<std::size_t>(n), -1.0);
  sweep.parent.assign(static_cast<std::size_t>(n), -1);
  sweep.dist[start] = 0.0;
  std::vector<int> stack{start};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (auto [v, w] : tree.adjacency()[static_cast<std::size_t>(u)]) {
      if (v == banned || sweep.dist[v] >= 0.0 || !edge_ok(u, v)) continue;
      sweep.dist[v] = sweep.dist[u] + w;
      sweep.parent[v] = u;
      stack.push_back(v);
    }
  }
  for (int v = 0; v < n; ++v)
    if (sweep.dist[v] > sweep.radius) {
      sweep.radius = sweep.dist[v];
      sweep.farthest = v;
    }
  if (sweep.farthest < 0) sweep.farthest = start;
  return sweep;
}

inline TreeSweep tree_sweep(const TreeInstance& tree, int start, int banned = -1) {
  return tree_sweep(tree, start, banned, [](int, int) { return true; });
}

// Largest component diameter after deleting one vertex: a double sweep per
// remaining component.
inline double diameter_without_vertex(const TreeInstance& tree, int banned) {
  const int n = tree.size();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  seen[banned] = 1;
  double best = 0.0;
  for (int v = 0; v < n; ++v) {
    if (seen[v]) continue;
    const TreeSweep out = tree_sweep(tree, v, banned);
    for (int u = 0; u < n; ++u)
      if (out.dist[u] >= 0.0) seen[u] = 1;
    const TreeSweep back = tree_sweep(tree, out.farthest, banned);
    best = std::max(best, back.radius);
  }
  return best;
}

}  // namespace detail

/// Diameter path by double sweep: the farthest vertex from an arbitrary root,
/// then the farthest vertex from it; returns that path and its length.
inline std::pair<std::vector<int>, double> tree_diameter_path(const TreeInstance& tree) {
  if (tree.size() == 0) throw std::invalid_argument("tree: empty instance");
  const detail::TreeSweep first = detail::tree_sweep(tree, 0);
  const detail::TreeSweep second = detail::tree_sweep(tree, first.farthest);
  std::vector<int> path;
  for (int v = second.farthest; v >= 0; v = second.parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return {std::move(path), second.radius};
}

/// The subpath of a diameter path lying on every longest path: exactly the
/// vertices whose removal drops the remaining diameter strictly below L
/// (relative tolerance 1e-9), since a surviving length-L path would be a
/// longest path avoiding the vertex.
inline std::vector<int> longest_path_intersection(const TreeInstance& tree,
                                                  const std::vector<int>& diameter_path,
                                                  double length) {
  if (diameter_path.empty())
    throw std::invalid_argument("tree: empty diameter path");
  if (length == 0.0) return {diameter_path.front()};
  const double cutoff = length - 1e-9 * length;
  std::vector<int> core;
  std::vector<int> picked_at;
  for (int i = 0; i < static_cast<int>(diameter_path.size()); ++i) {
    const int q = diameter_path[static_cast<std::size_t>(i)];
    if (detail::diameter_without_vertex(tree, q) < cutoff) {
      core.push_back(q);
      picked_at.push_back(i);
    }
  }
  if (core.empty())
    throw std::runtime_error("tree: longest-path intersection came out empty");
  for (std::size_t i = 1; i < picked_at.size(); ++i)
    if (picked_at[i] != picked_at[i - 1] + 1)
      throw std::runtime_error("tree: longest-path intersection not contiguous");
  return core;
}

/// Compress every component hanging off the core path into a pendant edge
/// carrying its eccentricity, and record the largest component-internal
/// diameter, which no core shortcut can affect.
inline CaterpillarInstance caterpillarize(const TreeInstance& tree,
                                          const std::vector<int>& core) {
  const int n = tree.size();
  const int m = static_cast<int>(core.size());
  if (m == 0) throw std::invalid_argument("caterpillar: empty core");
  CaterpillarInstance cat;
  cat.spine = core;
  cat.spine_prefix.resize(static_cast<std::size_t>(m));
  cat.spine_prefix[0] = 0.0;
  for (int i = 0; i + 1 < m; ++i) {
    if (!tree.has_edge(core[i], core[i + 1]))
      throw std::invalid_argument("caterpillar: core is not a path in the tree");
    cat.spine_prefix[i + 1] =
        cat.spine_prefix[i] + tree.metric().distance(core[i], core[i + 1]);
  }

  std::unordered_set<long long> blocked;
  for (int i = 0; i + 1 < m; ++i) {
    const long long u = std::min(core[i], core[i + 1]);
    const long long v = std::max(core[i], core[i + 1]);
    blocked.insert(u * n + v);
  }
  auto edge_ok = [&](int u, int v) {
    const long long a = std::min(u, v), b = std::max(u, v);
    return !blocked.contains(a * n + b);
  };

  cat.pendant_height.assign(static_cast<std::size_t>(m), 0.0);
  cat.spine_position_of.assign(static_cast<std::size_t>(n), -1);
  cat.intra_component_diameter = 0.0;
  for (int i = 0; i < m; ++i) {
    const detail::TreeSweep out = detail::tree_sweep(tree, core[i], -1, edge_ok);
    for (int v = 0; v < n; ++v)
      if (out.dist[v] >= 0.0) cat.spine_position_of[v] = i;
    cat.pendant_height[i] = out.radius;
    const detail::TreeSweep back = detail::tree_sweep(
        tree, out.farthest, -1,
        [&](int u, int v) { return cat.spine_position_of[v] == i && edge_ok(u, v); });
    cat.intra_component_diameter = std::max(cat.intra_component_diameter, back.radius);
  }
  for (int v = 0; v < n; ++v)
    if (cat.spine_position_of[v] < 0)
      throw std::runtime_error("caterpillar: vertex not attached to the core");
  return cat;
}

enum class InnerSearch { linear_scan, binary_search };

/// Minimum-diameter shortcut for a tree. Both endpoints range over the core
/// path (an optimal shortcut always has one there, and projecting the other
/// onto it never hurts); each candidate is evaluated on the compressed
/// caterpillar. When the intersection of all longest paths is a single
/// vertex or edge, no shortcut improves the diameter.
inline OptResult tree_optimal_shortcut(const TreeInstance& tree,
                                       InnerSearch inner = InnerSearch::linear_scan) {
  if (tree.size() < 3)
    throw std::invalid_argument("tree optimize: no augmenting non-edge for n < 3");
  auto [diameter_path, length] = tree_diameter_path(tree);
  const std::vector<int> core = longest_path_intersection(tree, diameter_path, length);
  OptResult res;
  res.original_diameter = length;
  res.lambda_bracket = {length, length};
  if (core.size() <= 2) {
    res.diameter = length;
    return res;
  }
  const CaterpillarInstance cat = caterpillarize(tree, core);
  const int m = static_cast<int>(core.size());

  int evaluations = 0;
  auto weight = [&](int i, int j) {
    return tree.metric().distance(cat.spine[i], cat.spine[j]);
  };
  auto value = [&](int k, int l) {
    ++evaluations;
    return caterpillar_diameter_with_shortcut(cat, {k, l, weight(k, l)});
  };

  double best = std::numeric_limits<double>::infinity();
  int best_k = -1, best_l = -1;
  auto consider = [&](int k, int l) {
    const double v = value(k, l);
    if (v < best) {
      best = v;
      best_k = k;
      best_l = l;
    }
  };
  for (int k = 0; k + 2 < m; ++k) {
    if (inner == InnerSearch::linear_scan) {
      for (int l = k + 2; l < m; ++l) consider(k, l);
    } else {
      // The grouped parts move monotonically in l, so the minimum of their
      // max sits at the first index where the rising group overtakes.
      auto rising_dominates = [&](int l) {
        ++evaluations;
        const detail::CaterpillarParts parts =
            detail::caterpillar_parts(cat, k, l, weight(k, l));
        return parts.rising >= parts.falling;
      };
      const int crossing = detail::first_true(k + 2, m - 1, rising_dominates);
      if (crossing <= m - 1) consider(k, crossing);
      if (crossing - 1 >= k + 2) consider(k, crossing - 1);
      if (crossing > m - 1) consider(k, m - 1);
    }
  }

  res.iterations = evaluations;
  // Augmentation cannot make the tree worse; rounding may overshoot by ulps.
  res.diameter = std::min(best, length);
  int u = cat.spine[static_cast<std::size_t>(best_k)];
  int v = cat.spine[static_cast<std::size_t>(best_l)];
  if (u > v) std::swap(u, v);
  res.shortcut = Shortcut{u, v, weight(best_k, best_l)};
  res.lambda_bracket = {res.diameter, res.diameter};
  return res;
}

}  // namespace diamaug
