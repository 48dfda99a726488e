#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace diamaug {

/// Point set with an O(1) distance oracle. Backed either by d-dimensional
/// coordinates (Euclidean distance) or by an explicit symmetric matrix.
/// Immutable after construction.
class MetricInstance {
 public:
  static MetricInstance from_points(std::vector<std::vector<double>> points) {
    if (points.empty()) throw std::invalid_argument("metric: empty point set");
    const std::size_t dim = points.front().size();
    if (dim == 0) throw std::invalid_argument("metric: zero-dimensional points");
    MetricInstance m;
    m.n_ = static_cast<int>(points.size());
    m.dim_ = static_cast<int>(dim);
    m.coords_.reserve(points.size() * dim);
    for (const auto& p : points) {
      if (p.size() != dim)
        throw std::invalid_argument("metric: inconsistent point dimensions");
      m.coords_.insert(m.coords_.end(), p.begin(), p.end());
    }
    return m;
  }

  static MetricInstance from_matrix(std::vector<std::vector<double>> rows) {
    if (rows.empty()) throw std::invalid_argument("metric: empty matrix");
    MetricInstance m;
    m.n_ = static_cast<int>(rows.size());
    m.matrix_.reserve(rows.size() * rows.size());
    for (const auto& r : rows) {
      if (r.size() != rows.size())
        throw std::invalid_argument("metric: matrix is not square");
      m.matrix_.insert(m.matrix_.end(), r.begin(), r.end());
    }
    return m;
  }

  int size() const { return n_; }
  bool has_coordinates() const { return dim_ > 0; }
  int dimension() const { return dim_; }

  std::span<const double> point(int i) const {
    check_index(i);
    return {coords_.data() + static_cast<std::size_t>(i) * dim_,
            static_cast<std::size_t>(dim_)};
  }

  double matrix_entry(int i, int j) const {
    check_index(i);
    check_index(j);
    return matrix_[static_cast<std::size_t>(i) * n_ + j];
  }

  double distance(int i, int j) const {
    check_index(i);
    check_index(j);
    if (dim_ > 0) {
      const double* a = coords_.data() + static_cast<std::size_t>(i) * dim_;
      const double* b = coords_.data() + static_cast<std::size_t>(j) * dim_;
      double sq = 0.0;
      for (int d = 0; d < dim_; ++d) {
        const double diff = a[d] - b[d];
        sq += diff * diff;
      }
      return std::sqrt(sq);
    }
    return matrix_[static_cast<std::size_t>(i) * n_ + j];
  }

 private:
  MetricInstance() = default;

  void check_index(int i) const {
    if (i < 0 || i >= n_) throw std::out_of_range("metric: vertex index out of range");
  }

  int n_ = 0;
  int dim_ = 0;                  // 0 means matrix-backed
  std::vector<double> coords_;   // n * dim, row-major
  std::vector<double> matrix_;   // n * n, row-major
};

enum class MetricViolationKind {
  asymmetry,         // dist(i,j) != dist(j,i)
  nonzero_diagonal,  // dist(i,i) != 0
  negative_entry,    // dist(i,j) < 0
  triangle,          // dist(i,k) > dist(i,j) + dist(j,k)
};

struct MetricViolation {
  MetricViolationKind kind;
  int i = -1;
  int j = -1;
  int k = -1;  // only set for triangle violations
};

/// Exhaustive metric-axiom check. O(n^3); violations are data, not errors.
/// Coordinate-backed instances satisfy the axioms by construction.
inline std::vector<MetricViolation> validate_metric(const MetricInstance& m) {
  std::vector<MetricViolation> out;
  if (m.has_coordinates()) return out;
  const int n = m.size();
  for (int i = 0; i < n; ++i) {
    if (m.matrix_entry(i, i) != 0.0)
      out.push_back({MetricViolationKind::nonzero_diagonal, i, i, -1});
    for (int j = 0; j < n; ++j) {
      if (m.matrix_entry(i, j) < 0.0)
        out.push_back({MetricViolationKind::negative_entry, i, j, -1});
      if (j > i && m.matrix_entry(i, j) != m.matrix_entry(j, i))
        out.push_back({MetricViolationKind::asymmetry, i, j, -1});
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (m.matrix_entry(i, k) > m.matrix_entry(i, j) + m.matrix_entry(j, k))
          out.push_back({MetricViolationKind::triangle, i, j, k});
  return out;
}

/// Prefix sums of consecutive edge lengths along `order`:
/// result[0] = 0, result[i+1] = result[i] + dist(order[i], order[i+1]).
inline std::vector<double> compute_prefix_sums(const MetricInstance& metric,
                                               std::span<const int> order) {
  if (order.empty()) throw std::invalid_argument("path: empty vertex order");
  std::vector<double> prefix(order.size());
  prefix[0] = 0.0;
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    prefix[i + 1] = prefix[i] + metric.distance(order[i], order[i + 1]);
  return prefix;
}

/// A path embedded in a metric space: visiting order plus prefix sums of the
/// edge lengths. Positions are 0-based along the path; `vertex(i)` maps back
/// to the metric's vertex ids.
class PathInstance {
 public:
  explicit PathInstance(MetricInstance metric)
      : metric_(std::move(metric)), order_(identity_order(metric_.size())) {
    prefix_ = compute_prefix_sums(metric_, order_);
  }

  PathInstance(MetricInstance metric, std::vector<int> order)
      : metric_(std::move(metric)), order_(std::move(order)) {
    if (static_cast<int>(order_.size()) != metric_.size())
      throw std::invalid_argument("path: order size does not match point count");
    std::vector<char> seen(order_.size(), 0);
    for (int v : order_) {
      if (v < 0 || v >= metric_.size() || seen[v])
        throw std::invalid_argument("path: order is not a permutation");
      seen[v] = 1;
    }
    prefix_ = compute_prefix_sums(metric_, order_);
  }

  int size() const { return static_cast<int>(order_.size()); }
  double length() const { return prefix_.back(); }
  const MetricInstance& metric() const { return metric_; }
  int vertex(int position) const { return order_[static_cast<std::size_t>(position)]; }
  const std::vector<int>& order() const { return order_; }
  std::span<const double> prefix_sums() const { return prefix_; }
  double prefix(int position) const { return prefix_[static_cast<std::size_t>(position)]; }

  /// Distance along the path between positions i <= j.
  double path_distance(int i, int j) const {
    return prefix_[static_cast<std::size_t>(j)] - prefix_[static_cast<std::size_t>(i)];
  }

  /// Metric (straight-line) distance between the points at positions i, j.
  double metric_distance(int i, int j) const {
    return metric_.distance(order_[static_cast<std::size_t>(i)],
                            order_[static_cast<std::size_t>(j)]);
  }

 private:
  static std::vector<int> identity_order(int n) {
    std::vector<int> o(static_cast<std::size_t>(n));
    std::iota(o.begin(), o.end(), 0);
    return o;
  }

  MetricInstance metric_;
  std::vector<int> order_;
  std::vector<double> prefix_;
};

/// A tree embedded in a metric space; every edge weighs its metric distance.
class TreeInstance {
 public:
  TreeInstance(MetricInstance metric, std::vector<std::pair<int, int>> edges)
      : metric_(std::move(metric)), edges_(std::move(edges)) {
    const int n = metric_.size();
    if (static_cast<int>(edges_.size()) != n - 1)
      throw std::invalid_argument("tree: expected n-1 edges");
    adjacency_.assign(static_cast<std::size_t>(n), {});
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (auto [u, v] : edges_) {
      if (u < 0 || u >= n || v < 0 || v >= n || u == v)
        throw std::invalid_argument("tree: bad edge endpoint");
      const int ru = find(u), rv = find(v);
      if (ru == rv) throw std::invalid_argument("tree: edges contain a cycle");
      parent[ru] = rv;
      const double w = metric_.distance(u, v);
      adjacency_[u].push_back({v, w});
      adjacency_[v].push_back({u, w});
    }
    // n-1 acyclic edges on n vertices are necessarily connected.
  }

  int size() const { return metric_.size(); }
  const MetricInstance& metric() const { return metric_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<std::vector<std::pair<int, double>>>& adjacency() const {
    return adjacency_;
  }

  bool has_edge(int u, int v) const {
    for (auto [w, len] : adjacency_[static_cast<std::size_t>(u)])
      if (w == v) return true;
    return false;
  }

 private:
  MetricInstance metric_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<std::pair<int, double>>> adjacency_;
};

}  // namespace diamaug
