#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace diamaug {

/// Fair split tree over a sorted 1-d point set. Node ranges index the sorted
/// coordinate array; each internal node splits its bounding interval at the
/// midpoint (falling back to halving the index range when every coordinate
/// in the node coincides).
struct SplitTreeNode {
  int begin = 0;
  int end = 0;  // [begin, end)
  double lo = 0.0;
  double hi = 0.0;
  int left = -1;
  int right = -1;
  bool leaf() const { return left < 0; }
  double extent() const { return hi - lo; }
};

struct SplitTree {
  std::vector<double> coords;
  std::vector<SplitTreeNode> nodes;
  int root = 0;
};

namespace detail {

inline int build_split_node(SplitTree& tree, int begin, int end) {
  const int id = static_cast<int>(tree.nodes.size());
  tree.nodes.push_back({begin, end, tree.coords[begin], tree.coords[end - 1], -1, -1});
  if (end - begin == 1) return id;
  int split;
  if (tree.coords[begin] == tree.coords[end - 1]) {
    split = begin + (end - begin) / 2;
  } else {
    const double mid = tree.coords[begin] + 0.5 * (tree.coords[end - 1] - tree.coords[begin]);
    split = static_cast<int>(
        std::upper_bound(tree.coords.begin() + begin, tree.coords.begin() + end, mid) -
        tree.coords.begin());
    if (split <= begin || split >= end) split = begin + (end - begin) / 2;
  }
  const int left = build_split_node(tree, begin, split);
  const int right = build_split_node(tree, split, end);
  tree.nodes[id].left = left;
  tree.nodes[id].right = right;
  return id;
}

}  // namespace detail

inline SplitTree build_split_tree(std::vector<double> coords) {
  if (coords.empty()) throw std::invalid_argument("split tree: empty point set");
  if (!std::is_sorted(coords.begin(), coords.end()))
    throw std::invalid_argument("split tree: coordinates must be sorted");
  SplitTree tree;
  tree.coords = std::move(coords);
  tree.nodes.reserve(2 * tree.coords.size());
  tree.root = detail::build_split_node(tree, 0, static_cast<int>(tree.coords.size()));
  return tree;
}

/// One well-separated pair: two disjoint index ranges of the sorted array
/// plus a deterministic representative for each (the smallest index).
struct WspdPair {
  int a_begin = 0;
  int a_end = 0;
  int b_begin = 0;
  int b_end = 0;
  int rep_a = 0;
  int rep_b = 0;
};

namespace detail {

inline bool well_separated(const SplitTreeNode& a, const SplitTreeNode& b, double s) {
  const double radius = 0.5 * std::max(a.extent(), b.extent());
  const double gap = std::max(0.0, std::max(b.lo - a.hi, a.lo - b.hi));
  if (gap >= s * radius) {
    // Coincident point sets separate only as singletons; larger runs of
    // duplicates keep splitting (and inflate the pair count).
    if (gap == 0.0) return a.end - a.begin == 1 && b.end - b.begin == 1;
    return true;
  }
  return false;
}

inline void find_wspd_pairs(const SplitTree& tree, int u, int v, double s,
                            std::vector<WspdPair>& out) {
  const SplitTreeNode& a = tree.nodes[u];
  const SplitTreeNode& b = tree.nodes[v];
  if (well_separated(a, b, s)) {
    out.push_back({a.begin, a.end, b.begin, b.end, a.begin, b.begin});
    return;
  }
  // Split the wider node; on ties (duplicate runs) whichever can split.
  // Two singletons are always separated, so one side is internal here.
  int split = u, other = v;
  if (tree.nodes[split].extent() < tree.nodes[other].extent()) std::swap(split, other);
  if (tree.nodes[split].leaf()) std::swap(split, other);
  find_wspd_pairs(tree, tree.nodes[split].left, other, s, out);
  find_wspd_pairs(tree, tree.nodes[split].right, other, s, out);
}

inline void decompose_wspd(const SplitTree& tree, int u, double s,
                           std::vector<WspdPair>& out) {
  const SplitTreeNode& node = tree.nodes[u];
  if (node.leaf()) return;
  find_wspd_pairs(tree, node.left, node.right, s, out);
  decompose_wspd(tree, node.left, s, out);
  decompose_wspd(tree, node.right, s, out);
}

}  // namespace detail

/// Well-separated pair decomposition with separation constant s: covers every
/// unordered point pair exactly once.
inline std::vector<WspdPair> compute_wspd(const SplitTree& tree, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("wspd: separation must be positive");
  std::vector<WspdPair> pairs;
  detail::decompose_wspd(tree, tree.root, s, pairs);
  return pairs;
}

/// Exhaustive check of the decomposition properties: disjoint pairs,
/// exactly-once coverage, and s-separation of the bounding intervals.
/// O(n^2 + sum |A||B|); intended for tests.
inline bool validate_wspd(std::span<const double> coords,
                          std::span<const WspdPair> pairs, double s) {
  const int n = static_cast<int>(coords.size());
  std::vector<std::uint8_t> covered(static_cast<std::size_t>(n) * n, 0);
  for (const WspdPair& p : pairs) {
    const bool disjoint = p.a_end <= p.b_begin || p.b_end <= p.a_begin;
    if (!disjoint) return false;
    if (p.rep_a < p.a_begin || p.rep_a >= p.a_end) return false;
    if (p.rep_b < p.b_begin || p.rep_b >= p.b_end) return false;
    const double ra = 0.5 * (coords[p.a_end - 1] - coords[p.a_begin]);
    const double rb = 0.5 * (coords[p.b_end - 1] - coords[p.b_begin]);
    const double gap = std::max(
        0.0, std::max(coords[p.b_begin] - coords[p.a_end - 1],
                      coords[p.a_begin] - coords[p.b_end - 1]));
    if (gap < s * std::max(ra, rb)) return false;
    if (gap == 0.0 && (p.a_end - p.a_begin > 1 || p.b_end - p.b_begin > 1))
      return false;
    for (int i = p.a_begin; i < p.a_end; ++i)
      for (int j = p.b_begin; j < p.b_end; ++j) {
        const int x = std::min(i, j), y = std::max(i, j);
        std::uint8_t& mark = covered[static_cast<std::size_t>(x) * n + y];
        if (mark) return false;  // covered twice
        mark = 1;
      }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!covered[static_cast<std::size_t>(i) * n + j]) return false;
  return true;
}

}  // namespace diamaug
