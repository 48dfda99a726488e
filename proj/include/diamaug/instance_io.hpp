#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "diamaug/metric.hpp"

namespace diamaug {

/// Instance files carry either coordinates or an explicit distance matrix,
/// plus the graph structure. Vertex indices are 1-based on disk.
struct ParsedInstance {
  std::string kind;  // "path" or "tree"
  std::optional<PathInstance> path;
  std::optional<TreeInstance> tree;
};

namespace detail {

inline MetricInstance metric_from_json(const nlohmann::json& j) {
  const bool has_points = j.contains("points");
  const bool has_matrix = j.contains("distance_matrix");
  if (has_points == has_matrix)
    throw std::invalid_argument(
        "instance: exactly one of points/distance_matrix required");
  if (has_points) {
    std::vector<std::vector<double>> pts;
    for (const auto& row : j.at("points"))
      pts.push_back(row.get<std::vector<double>>());
    return MetricInstance::from_points(std::move(pts));
  }
  std::vector<std::vector<double>> rows;
  for (const auto& row : j.at("distance_matrix"))
    rows.push_back(row.get<std::vector<double>>());
  return MetricInstance::from_matrix(std::move(rows));
}

inline int from_one_based(int v, int n, const char* what) {
  if (v < 1 || v > n) throw std::invalid_argument(std::string("instance: bad ") + what);
  return v - 1;
}

}  // namespace detail

inline ParsedInstance parse_instance(const nlohmann::json& j) {
  ParsedInstance inst;
  inst.kind = j.at("kind").get<std::string>();
  MetricInstance metric = detail::metric_from_json(j);
  const int n = metric.size();
  if (inst.kind == "path") {
    if (j.contains("order")) {
      std::vector<int> order;
      for (const auto& v : j.at("order"))
        order.push_back(detail::from_one_based(v.get<int>(), n, "order entry"));
      inst.path.emplace(std::move(metric), std::move(order));
    } else {
      inst.path.emplace(std::move(metric));
    }
  } else if (inst.kind == "tree") {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("instance: each edge needs two endpoints");
      edges.push_back({detail::from_one_based(e[0].get<int>(), n, "edge endpoint"),
                       detail::from_one_based(e[1].get<int>(), n, "edge endpoint")});
    }
    inst.tree.emplace(std::move(metric), std::move(edges));
  } else {
    throw std::invalid_argument("instance: kind must be \"path\" or \"tree\"");
  }
  return inst;
}

inline ParsedInstance parse_instance_text(const std::string& text) {
  return parse_instance(nlohmann::json::parse(text));
}

inline nlohmann::json metric_to_json(const MetricInstance& metric) {
  nlohmann::json j;
  if (metric.has_coordinates()) {
    nlohmann::json pts = nlohmann::json::array();
    for (int i = 0; i < metric.size(); ++i) {
      const auto p = metric.point(i);
      pts.push_back(std::vector<double>(p.begin(), p.end()));
    }
    j["points"] = std::move(pts);
  } else {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < metric.size(); ++i) {
      std::vector<double> row(static_cast<std::size_t>(metric.size()));
      for (int k = 0; k < metric.size(); ++k) row[k] = metric.matrix_entry(i, k);
      rows.push_back(std::move(row));
    }
    j["distance_matrix"] = std::move(rows);
  }
  return j;
}

inline nlohmann::json instance_to_json(const PathInstance& path) {
  nlohmann::json j = metric_to_json(path.metric());
  j["kind"] = "path";
  bool identity = true;
  for (int i = 0; i < path.size(); ++i) identity = identity && path.vertex(i) == i;
  if (!identity) {
    std::vector<int> order;
    for (int i = 0; i < path.size(); ++i) order.push_back(path.vertex(i) + 1);
    j["order"] = std::move(order);
  }
  return j;
}

inline nlohmann::json instance_to_json(const TreeInstance& tree) {
  nlohmann::json j = metric_to_json(tree.metric());
  j["kind"] = "tree";
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : tree.edges()) edges.push_back({u + 1, v + 1});
  j["edges"] = std::move(edges);
  return j;
}

/// Result payload shared by every subcommand; optional fields appear only
/// when they apply. Shortcut endpoints are 1-based on disk.
struct RunResult {
  std::string algorithm;
  std::optional<std::pair<int, int>> shortcut;
  double diameter = 0.0;
  double original_diameter = 0.0;
  std::optional<double> lambda;
  std::optional<double> eps;
  double runtime_ms = 0.0;
  std::optional<std::uint64_t> seed;
};

inline nlohmann::json result_to_json(const RunResult& r) {
  nlohmann::json j;
  j["algorithm"] = r.algorithm;
  if (r.shortcut)
    j["shortcut"] = {r.shortcut->first + 1, r.shortcut->second + 1};
  else
    j["shortcut"] = nullptr;
  j["diameter"] = r.diameter;
  j["original_diameter"] = r.original_diameter;
  if (r.lambda) j["lambda"] = *r.lambda;
  if (r.eps) j["eps"] = *r.eps;
  j["runtime_ms"] = r.runtime_ms;
  if (r.seed) j["seed"] = *r.seed;
  return j;
}

}  // namespace diamaug
