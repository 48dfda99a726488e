#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "diamaug/generate.hpp"
#include "diamaug/metric.hpp"
#include "diamaug/oracle.hpp"
#include "diamaug/unicyclic.hpp"

namespace testsupport {

inline diamaug::PathInstance unit_square_path() {
  return diamaug::PathInstance(
      diamaug::MetricInstance::from_points({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
}

inline diamaug::PathInstance collinear_path(std::vector<double> xs) {
  std::vector<std::vector<double>> pts;
  pts.reserve(xs.size());
  for (double x : xs) pts.push_back({x, 0.0});
  return diamaug::PathInstance(diamaug::MetricInstance::from_points(std::move(pts)));
}

inline diamaug::PathInstance unit_collinear(int n) {
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) xs[i] = i;
  return collinear_path(std::move(xs));
}

/// Reference diameter of path + shortcut straight from Dijkstra.
inline double dijkstra_path_diameter(const diamaug::PathInstance& path,
                                     const diamaug::Shortcut& sc) {
  return diamaug::augmented_diameter_dijkstra(
      diamaug::path_adjacency(path), diamaug::ExtraEdge{sc.a, sc.b, sc.weight});
}

inline double dijkstra_tree_diameter(const diamaug::TreeInstance& tree, int u, int v) {
  if (u == v)
    return diamaug::augmented_diameter_dijkstra(diamaug::tree_adjacency(tree));
  return diamaug::augmented_diameter_dijkstra(
      diamaug::tree_adjacency(tree),
      diamaug::ExtraEdge{u, v, tree.metric().distance(u, v)});
}

/// Compressed caterpillar as an explicit graph: spine vertices 0..m-1 plus
/// one pendant leaf per positive height.
inline diamaug::AdjacencyList caterpillar_adjacency(const std::vector<double>& spine_w,
                                                    const std::vector<double>& heights) {
  const int m = static_cast<int>(heights.size());
  diamaug::AdjacencyList adj(static_cast<std::size_t>(m));
  for (int i = 0; i + 1 < m; ++i) {
    adj[i].push_back({i + 1, spine_w[i]});
    adj[i + 1].push_back({i, spine_w[i]});
  }
  for (int i = 0; i < m; ++i) {
    if (heights[i] <= 0.0) continue;
    const int leaf = static_cast<int>(adj.size());
    adj.push_back({});
    adj[i].push_back({leaf, heights[i]});
    adj[leaf].push_back({i, heights[i]});
  }
  return adj;
}

inline diamaug::CaterpillarInstance make_caterpillar(const std::vector<double>& spine_w,
                                                     const std::vector<double>& heights,
                                                     double intra = 0.0) {
  const int m = static_cast<int>(heights.size());
  diamaug::CaterpillarInstance cat;
  cat.spine.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) cat.spine[i] = i;
  cat.spine_prefix.assign(static_cast<std::size_t>(m), 0.0);
  for (int i = 0; i + 1 < m; ++i) cat.spine_prefix[i + 1] = cat.spine_prefix[i] + spine_w[i];
  cat.pendant_height = heights;
  cat.intra_component_diameter = intra;
  return cat;
}

}  // namespace testsupport
