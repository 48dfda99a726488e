#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "diamaug/metric.hpp"

namespace diamaug {

/// Seeded uniform double in [0,1). Drawing from the raw engine keeps the
/// stream identical across standard library implementations.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

enum class PointDistribution { uniform_square, collinear, circle };

inline PointDistribution parse_distribution(const std::string& name) {
  if (name == "uniform-square") return PointDistribution::uniform_square;
  if (name == "collinear") return PointDistribution::collinear;
  if (name == "circle") return PointDistribution::circle;
  throw std::invalid_argument("unknown distribution: " + name);
}

inline std::vector<std::vector<double>> generate_points(int n, std::uint64_t seed,
                                                        PointDistribution dist) {
  if (n < 1) throw std::invalid_argument("generate: need at least one point");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<double>> pts;
  pts.reserve(static_cast<std::size_t>(n));
  switch (dist) {
    case PointDistribution::uniform_square:
      for (int i = 0; i < n; ++i) pts.push_back({uniform01(rng), uniform01(rng)});
      break;
    case PointDistribution::collinear: {
      std::vector<double> xs(static_cast<std::size_t>(n));
      for (double& x : xs) x = uniform01(rng);
      std::sort(xs.begin(), xs.end());
      for (double x : xs) pts.push_back({x, 0.0});
      break;
    }
    case PointDistribution::circle: {
      std::vector<double> angles(static_cast<std::size_t>(n));
      for (double& a : angles) a = uniform01(rng) * 6.283185307179586476925286766559;
      std::sort(angles.begin(), angles.end());
      for (double a : angles) pts.push_back({std::cos(a), std::sin(a)});
      break;
    }
  }
  return pts;
}

/// Path instance: points drawn per the distribution, visited in draw order
/// (coordinate order for the sorted families).
inline PathInstance generate_path(int n, std::uint64_t seed, PointDistribution dist) {
  return PathInstance(MetricInstance::from_points(generate_points(n, seed, dist)));
}

/// Random tree: points uniform in the unit square, topology decoded from a
/// uniform sequence (every labelled tree equally likely).
inline TreeInstance generate_tree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("generate: need at least one vertex");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<double>> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pts.push_back({uniform01(rng), uniform01(rng)});
  std::vector<std::pair<int, int>> edges;
  if (n == 2) edges.push_back({0, 1});
  if (n > 2) {
    std::vector<int> code(static_cast<std::size_t>(n - 2));
    for (int& c : code) c = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int c : code) ++degree[c];
    // Standard decoding: repeatedly join the smallest leaf to the next symbol.
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int v = 0; v < n; ++v)
      if (degree[v] == 1) leaves.push(v);
    for (int c : code) {
      const int leaf = leaves.top();
      leaves.pop();
      edges.push_back({leaf, c});
      if (--degree[c] == 1) leaves.push(c);
    }
    const int u = leaves.top();
    leaves.pop();
    const int v = leaves.top();
    edges.push_back({u, v});
  }
  return TreeInstance(MetricInstance::from_points(std::move(pts)), std::move(edges));
}

}  // namespace diamaug
