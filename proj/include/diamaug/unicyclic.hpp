#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "diamaug/metric.hpp"

namespace diamaug {

/// One candidate augmenting edge. For paths, `a`/`b` are path positions;
/// for trees, original vertex ids. Always a < b, and for a path augmentation
/// b > a+1 (adjacent positions are existing edges). The weight is the metric
/// distance between the endpoints.
struct Shortcut {
  int a = 0;
  int b = 0;
  double weight = 0.0;
};

inline Shortcut make_shortcut(const PathInstance& path, int a, int b) {
  if (a < 0 || b >= path.size() || a >= b)
    throw std::invalid_argument("shortcut: endpoints out of order or range");
  if (b == a + 1)
    throw std::invalid_argument("shortcut: endpoints already joined by a path edge");
  return {a, b, path.metric_distance(a, b)};
}

namespace detail {

// Shortest-route building blocks for a path with prefix sums D and a
// shortcut (a,b) of weight w. The decision predicates evaluate these exact
// expressions, which keeps threshold comparisons consistent between the
// O(n) evaluator and the O(log n) feasibility tests.
inline double cycle_length(std::span<const double> d, int a, int b, double w) {
  return (d[b] - d[a]) + w;
}
inline double start_via_shortcut(std::span<const double> d, int a, int b, double w,
                                 int x) {
  return (d[a] + w) + (d[b] - d[x]);
}
inline double end_via_shortcut(std::span<const double> d, int a, int b, double w,
                               int x) {
  return ((d[x] - d[a]) + w) + (d.back() - d[b]);
}
inline double ends_via_shortcut(std::span<const double> d, int a, int b, double w) {
  return (d[a] + w) + (d.back() - d[b]);
}
inline double cycle_pair(std::span<const double> d, int a, int b, double w, int x,
                         int y) {
  const double near_side = d[y] - d[x];
  return std::min(near_side, cycle_length(d, a, b, w) - near_side);
}

}  // namespace detail

/// The four monotone pieces whose maximum is the diameter of a path with one
/// shortcut (a,b): farthest cycle vertex from the path start, farthest cycle
/// vertex to the path end, the start-to-end distance, and the farthest pair
/// inside the cycle.
struct FourPartValues {
  double from_start = 0.0;
  double to_end = 0.0;
  double across = 0.0;
  double on_cycle = 0.0;

  double diameter() const {
    return std::max(std::max(from_start, to_end), std::max(across, on_cycle));
  }
};

/// Core evaluator over raw prefix sums. Accepts any a < b (b = a+1 denotes a
/// parallel edge, which the weighted representative path needs); the public
/// PathInstance wrappers enforce proper non-edges.
inline FourPartValues four_parts_prefix(std::span<const double> d, int a, int b,
                                        double w) {
  FourPartValues v;
  for (int x = a; x <= b; ++x) {
    v.from_start =
        std::max(v.from_start, std::min(d[x], detail::start_via_shortcut(d, a, b, w, x)));
    v.to_end = std::max(
        v.to_end, std::min(d.back() - d[x], detail::end_via_shortcut(d, a, b, w, x)));
  }
  v.across = std::min(d.back(), detail::ends_via_shortcut(d, a, b, w));

  // Farthest pair on the cycle by an antipodal sweep: for each x the cycle
  // distance to y grows until the halfway point and shrinks after it, and the
  // crossover index is non-decreasing in x.
  const double cyc = detail::cycle_length(d, a, b, w);
  int j = a + 1;
  for (int x = a; x < b; ++x) {
    if (j <= x) j = x + 1;
    while (j + 1 <= b && (d[j + 1] - d[x]) <= cyc - (d[j + 1] - d[x])) ++j;
    v.on_cycle = std::max(v.on_cycle, detail::cycle_pair(d, a, b, w, x, j));
    if (j + 1 <= b)
      v.on_cycle = std::max(v.on_cycle, detail::cycle_pair(d, a, b, w, x, j + 1));
  }
  return v;
}

inline double diameter_with_shortcut_prefix(std::span<const double> d, int a, int b,
                                            double w) {
  return four_parts_prefix(d, a, b, w).diameter();
}

inline void check_shortcut(const PathInstance& path, const Shortcut& sc) {
  if (sc.a < 0 || sc.b >= path.size() || sc.a >= sc.b || sc.b == sc.a + 1)
    throw std::invalid_argument("shortcut: invalid for this path");
  if (sc.weight < 0.0) throw std::invalid_argument("shortcut: negative weight");
}

inline FourPartValues four_parts(const PathInstance& path, const Shortcut& sc) {
  check_shortcut(path, sc);
  return four_parts_prefix(path.prefix_sums(), sc.a, sc.b, sc.weight);
}

/// Diameter of the path augmented with one shortcut, in O(n).
inline double path_diameter_with_shortcut(const PathInstance& path, const Shortcut& sc) {
  return four_parts(path, sc).diameter();
}

/// A tree compressed onto the common core of its longest paths: spine
/// vertices, one pendant edge per spine vertex carrying the eccentricity of
/// its hanging component, and the largest internal diameter among those
/// components (which no shortcut between spine vertices can change).
struct CaterpillarInstance {
  std::vector<int> spine;              // original vertex ids along the core
  std::vector<double> spine_prefix;    // cumulative spine edge lengths
  std::vector<double> pendant_height;  // per spine vertex
  double intra_component_diameter = 0.0;
  std::vector<int> spine_position_of;  // original vertex id -> spine position
};

namespace detail {

// The terms that grow as b moves right (pairs pulled onto or across the
// cycle) and the terms that shrink (pairs resolved on the far side), so a
// crossing search over b stays valid.
struct CaterpillarParts {
  double rising = 0.0;
  double falling = 0.0;
  double value() const { return std::max(rising, falling); }
};

inline CaterpillarParts caterpillar_parts(const CaterpillarInstance& cat, int a, int b,
                                          double w) {
  std::span<const double> d(cat.spine_prefix);
  std::span<const double> h(cat.pendant_height);
  const int m = static_cast<int>(cat.spine.size());

  // Deepest reach of the prefix [0..a] measured at spine position a, and the
  // best pendant-to-pendant pair entirely inside the prefix. The pair term is
  // what the compression onto the spine would otherwise lose.
  double best_left = h[0] - d[0];
  double prefix_pair = 0.0;
  for (int u = 1; u <= a; ++u) {
    prefix_pair = std::max(prefix_pair, (d[u] + h[u]) + best_left);
    best_left = std::max(best_left, h[u] - d[u]);
  }
  const double reach_before = d[a] + best_left;

  double best_right = h[m - 1] + d[m - 1];
  double suffix_pair = 0.0;
  for (int v = m - 2; v >= b; --v) {
    suffix_pair = std::max(suffix_pair, (h[v] - d[v]) + best_right);
    best_right = std::max(best_right, h[v] + d[v]);
  }
  const double reach_after = best_right - d[b];

  const double across = (reach_before + std::min(d[b] - d[a], w)) + reach_after;

  double into_cycle_from_start = 0.0;  // prefix extremity to cycle pendants
  for (int x = a + 1; x <= b; ++x)
    into_cycle_from_start =
        std::max(into_cycle_from_start, cycle_pair(d, a, b, w, a, x) + h[x]);
  const double from_start = reach_before + into_cycle_from_start;

  double into_cycle_from_end = 0.0;
  for (int x = a; x < b; ++x)
    into_cycle_from_end =
        std::max(into_cycle_from_end, cycle_pair(d, a, b, w, x, b) + h[x]);
  const double to_end = reach_after + into_cycle_from_end;

  double on_cycle = 0.0;  // pendant heights break the antipodal order
  for (int x = a; x < b; ++x)
    for (int y = x + 1; y <= b; ++y)
      on_cycle = std::max(on_cycle, (h[x] + cycle_pair(d, a, b, w, x, y)) + h[y]);

  CaterpillarParts parts;
  parts.rising = std::max(std::max(from_start, on_cycle), prefix_pair);
  parts.falling = std::max(std::max(to_end, across), suffix_pair);
  return parts;
}

}  // namespace detail

/// Diameter of the compressed caterpillar augmented with a shortcut between
/// spine positions sc.a < sc.b, including the shortcut-independent floor from
/// hanging-component interiors. Quadratic in the cycle size.
inline double caterpillar_diameter_with_shortcut(const CaterpillarInstance& cat,
                                                 const Shortcut& sc) {
  const int m = static_cast<int>(cat.spine.size());
  if (sc.a < 0 || sc.b >= m || sc.a >= sc.b)
    throw std::invalid_argument("caterpillar shortcut: endpoints off the spine");
  return std::max(detail::caterpillar_parts(cat, sc.a, sc.b, sc.weight).value(),
                  cat.intra_component_diameter);
}

}  // namespace diamaug
