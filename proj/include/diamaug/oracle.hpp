#pragma once

#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "diamaug/metric.hpp"
#include "diamaug/unicyclic.hpp"

namespace diamaug {

/// Weighted adjacency list; the reference representation for brute-force
/// diameter computations.
using AdjacencyList = std::vector<std::vector<std::pair<int, double>>>;

inline AdjacencyList path_adjacency(const PathInstance& path) {
  AdjacencyList adj(static_cast<std::size_t>(path.size()));
  for (int i = 0; i + 1 < path.size(); ++i) {
    const double w = path.metric_distance(i, i + 1);
    adj[i].push_back({i + 1, w});
    adj[i + 1].push_back({i, w});
  }
  return adj;
}

inline AdjacencyList tree_adjacency(const TreeInstance& tree) { return tree.adjacency(); }

struct ExtraEdge {
  int u = 0;
  int v = 0;
  double weight = 0.0;
};

/// Diameter by n single-source Dijkstra runs, optionally with one extra edge.
/// Throws if the graph is disconnected.
inline double augmented_diameter_dijkstra(const AdjacencyList& adj,
                                          std::optional<ExtraEdge> extra = std::nullopt) {
  const int n = static_cast<int>(adj.size());
  if (n == 0) throw std::invalid_argument("oracle: empty graph");
  constexpr double inf = std::numeric_limits<double>::infinity();
  double diameter = 0.0;
  std::vector<double> dist(static_cast<std::size_t>(n));
  using Item = std::pair<double, int>;
  for (int src = 0; src < n; ++src) {
    std::fill(dist.begin(), dist.end(), inf);
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
    dist[src] = 0.0;
    queue.push({0.0, src});
    while (!queue.empty()) {
      const double d = queue.top().first;
      const int u = queue.top().second;
      queue.pop();
      if (d > dist[u]) continue;
      auto relax = [&](int to, double w) {
        if (d + w < dist[to]) {
          dist[to] = d + w;
          queue.push({dist[to], to});
        }
      };
      for (auto [to, w] : adj[u]) relax(to, w);
      if (extra) {
        if (u == extra->u) relax(extra->v, extra->weight);
        if (u == extra->v) relax(extra->u, extra->weight);
      }
    }
    for (double d : dist) {
      if (d == inf) throw std::invalid_argument("oracle: disconnected graph");
      diameter = std::max(diameter, d);
    }
  }
  return diameter;
}

struct OracleResult {
  std::vector<std::pair<int, int>> best_shortcuts;  // all argmins within 1e-12
  double optimum = 0.0;
};

/// Exhaustive minimum over all path non-edges, each evaluated with the O(n)
/// diameter routine (itself cross-validated against Dijkstra in the tests).
inline OracleResult brute_force_path(const PathInstance& path) {
  const int n = path.size();
  if (n < 3) throw std::invalid_argument("oracle: no non-edge exists for n < 3");
  OracleResult res;
  res.optimum = std::numeric_limits<double>::infinity();
  std::vector<std::pair<std::pair<int, int>, double>> values;
  for (int a = 0; a < n; ++a)
    for (int b = a + 2; b < n; ++b) {
      const double value =
          path_diameter_with_shortcut(path, {a, b, path.metric_distance(a, b)});
      values.push_back({{a, b}, value});
      res.optimum = std::min(res.optimum, value);
    }
  for (const auto& [pair, value] : values)
    if (value <= res.optimum + 1e-12) res.best_shortcuts.push_back(pair);
  return res;
}

/// Exhaustive minimum over all tree non-edges via Dijkstra. Intended for
/// desk-size instances only.
inline OracleResult brute_force_tree(const TreeInstance& tree) {
  const int n = tree.size();
  if (n < 3) throw std::invalid_argument("oracle: no non-edge exists for n < 3");
  const AdjacencyList adj = tree_adjacency(tree);
  OracleResult res;
  res.optimum = std::numeric_limits<double>::infinity();
  std::vector<std::pair<std::pair<int, int>, double>> values;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (tree.has_edge(u, v)) continue;
      const double value = augmented_diameter_dijkstra(
          adj, ExtraEdge{u, v, tree.metric().distance(u, v)});
      values.push_back({{u, v}, value});
      res.optimum = std::min(res.optimum, value);
    }
  for (const auto& [pair, value] : values)
    if (value <= res.optimum + 1e-12) res.best_shortcuts.push_back(pair);
  return res;
}

}  // namespace diamaug
