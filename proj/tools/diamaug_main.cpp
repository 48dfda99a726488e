// Command-line front end: exact, approximate, and brute-force shortcut
// optimizers plus instance generation and a timing harness. Instances and
// results travel as JSON (1-based vertex indices); bench emits CSV.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "diamaug/generate.hpp"
#include "diamaug/instance_io.hpp"
#include "diamaug/oracle.hpp"
#include "diamaug/path_approx.hpp"
#include "diamaug/path_opt.hpp"
#include "diamaug/tree_augment.hpp"

namespace {

constexpr int kExitInputError = 2;
constexpr int kExitWrongKind = 3;

class WallTimer {
 public:
  WallTimer() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

diamaug::ParsedInstance load_instance(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open input file: " + file);
  return diamaug::parse_instance(nlohmann::json::parse(in));
}

void emit(const diamaug::RunResult& result) {
  std::cout << diamaug::result_to_json(result).dump(2) << "\n";
}

int default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::optional<std::pair<int, int>> shortcut_pair(const std::optional<diamaug::Shortcut>& sc) {
  if (!sc) return std::nullopt;
  return std::make_pair(sc->a, sc->b);
}

int run_decide(const std::string& input, double lambda, int threads) {
  const auto inst = load_instance(input);
  if (!inst.path) return kExitWrongKind;
  WallTimer timer;
  const auto found = diamaug::decide_shortcut(*inst.path, lambda, threads);
  diamaug::RunResult result;
  result.algorithm = "decide";
  result.lambda = lambda;
  result.original_diameter = inst.path->length();
  result.shortcut = shortcut_pair(found);
  result.diameter =
      found ? diamaug::path_diameter_with_shortcut(*inst.path, *found)
            : inst.path->length();
  result.runtime_ms = timer.elapsed_ms();
  emit(result);
  return 0;
}

int run_path_exact(const std::string& input, double tol, int threads, bool polish) {
  const auto inst = load_instance(input);
  if (!inst.path) return kExitWrongKind;
  WallTimer timer;
  const auto opt = diamaug::optimal_shortcut(*inst.path, tol, 200, threads, polish);
  diamaug::RunResult result;
  result.algorithm = "path-exact";
  result.original_diameter = opt.original_diameter;
  result.shortcut = shortcut_pair(opt.shortcut);
  result.diameter = opt.diameter;
  result.runtime_ms = timer.elapsed_ms();
  emit(result);
  return 0;
}

int run_path_approx(const std::string& input, double eps) {
  const auto inst = load_instance(input);
  if (!inst.path) return kExitWrongKind;
  WallTimer timer;
  const auto opt = diamaug::approx_optimal_shortcut(*inst.path, eps);
  diamaug::RunResult result;
  result.algorithm = "path-approx";
  result.eps = eps;
  result.original_diameter = opt.original_diameter;
  result.shortcut = shortcut_pair(opt.shortcut);
  result.diameter = opt.diameter;
  result.runtime_ms = timer.elapsed_ms();
  emit(result);
  return 0;
}

int run_tree_exact(const std::string& input, const std::string& inner) {
  const auto inst = load_instance(input);
  if (!inst.tree) return kExitWrongKind;
  const auto mode = inner == "bsearch" ? diamaug::InnerSearch::binary_search
                                       : diamaug::InnerSearch::linear_scan;
  WallTimer timer;
  const auto opt = diamaug::tree_optimal_shortcut(*inst.tree, mode);
  diamaug::RunResult result;
  result.algorithm = "tree-exact";
  result.original_diameter = opt.original_diameter;
  result.shortcut = shortcut_pair(opt.shortcut);
  result.diameter = opt.diameter;
  result.runtime_ms = timer.elapsed_ms();
  emit(result);
  return 0;
}

int run_brute(const std::string& input) {
  const auto inst = load_instance(input);
  WallTimer timer;
  diamaug::RunResult result;
  result.algorithm = "brute";
  if (inst.path) {
    const auto res = diamaug::brute_force_path(*inst.path);
    result.original_diameter = inst.path->length();
    result.diameter = res.optimum;
    result.shortcut = res.best_shortcuts.front();
  } else {
    const auto res = diamaug::brute_force_tree(*inst.tree);
    result.original_diameter =
        diamaug::augmented_diameter_dijkstra(diamaug::tree_adjacency(*inst.tree));
    result.diameter = res.optimum;
    result.shortcut = res.best_shortcuts.front();
  }
  result.runtime_ms = timer.elapsed_ms();
  emit(result);
  return 0;
}

int run_gen(const std::string& kind, int n, std::uint64_t seed, const std::string& dist) {
  nlohmann::json j;
  if (kind == "path") {
    j = diamaug::instance_to_json(
        diamaug::generate_path(n, seed, diamaug::parse_distribution(dist)));
  } else if (kind == "tree") {
    j = diamaug::instance_to_json(diamaug::generate_tree(n, seed));
  } else {
    throw std::invalid_argument("gen: kind must be path or tree");
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

std::vector<int> parse_sizes(const std::string& list) {
  std::vector<int> sizes;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    sizes.push_back(std::stoi(item));
  }
  if (sizes.empty()) throw std::invalid_argument("bench: empty size list");
  return sizes;
}

int run_bench(const std::string& suite, const std::string& sizes_list,
              std::uint64_t seed, double eps, int reps, int threads) {
  const std::vector<int> sizes = parse_sizes(sizes_list);
  std::cout << "suite,n,eps,seed,runtime_ms,diameter\n";
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const int n = sizes[i];
    const std::uint64_t row_seed = seed + i;
    for (int rep = 0; rep < reps; ++rep) {
      double ms = 0.0;
      double diameter = 0.0;
      double used_eps = 0.0;
      if (suite == "decision") {
        const auto path =
            diamaug::generate_path(n, row_seed, diamaug::PointDistribution::uniform_square);
        const double lambda = 0.2 * path.length();  // infeasible: forces a full scan
        WallTimer timer;
        const auto found = diamaug::decide_shortcut(path, lambda, threads);
        ms = timer.elapsed_ms();
        diameter = found ? diamaug::path_diameter_with_shortcut(path, *found)
                         : path.length();
      } else if (suite == "exact") {
        const auto path =
            diamaug::generate_path(n, row_seed, diamaug::PointDistribution::uniform_square);
        WallTimer timer;
        const auto opt = diamaug::optimal_shortcut(path, 1e-12, 200, threads);
        ms = timer.elapsed_ms();
        diameter = opt.diameter;
      } else if (suite == "approx") {
        used_eps = eps;
        const auto path =
            diamaug::generate_path(n, row_seed, diamaug::PointDistribution::uniform_square);
        WallTimer timer;
        const auto opt = diamaug::approx_optimal_shortcut(path, eps);
        ms = timer.elapsed_ms();
        diameter = opt.diameter;
      } else if (suite == "tree") {
        const auto tree = diamaug::generate_tree(n, row_seed);
        WallTimer timer;
        const auto opt = diamaug::tree_optimal_shortcut(tree);
        ms = timer.elapsed_ms();
        diameter = opt.diameter;
      } else {
        throw std::invalid_argument("bench: unknown suite " + suite);
      }
      std::cout << suite << "," << n << "," << used_eps << "," << row_seed << ","
                << ms << "," << diameter << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diameter-optimal single-shortcut augmentation for paths and trees"};
  app.require_subcommand(1);

  std::string input;
  std::string format = "json";
  double lambda = 0.0;
  double tol = 1e-12;
  double eps = 0.1;
  int threads = default_threads();
  bool polish = false;
  std::string inner = "scan";
  std::string kind = "path";
  std::string dist = "uniform-square";
  int n = 0;
  std::uint64_t seed = 1;
  std::string suite = "decision";
  std::string sizes = "1024";
  int reps = 3;
  int bench_threads = 1;

  auto* decide = app.add_subcommand("decide", "Decide whether some shortcut reaches a target diameter");
  decide->add_option("--input", input)->required();
  decide->add_option("--lambda", lambda)->required();
  decide->add_option("--threads", threads);
  decide->add_option("--format", format)->check(CLI::IsMember({"json"}));

  auto* path_exact = app.add_subcommand("path-exact", "Optimal shortcut for a path");
  path_exact->add_option("--input", input)->required();
  path_exact->add_option("--tol", tol);
  path_exact->add_option("--threads", threads);
  path_exact->add_flag("--polish", polish);
  path_exact->add_option("--format", format)->check(CLI::IsMember({"json"}));

  auto* path_approx = app.add_subcommand("path-approx", "(1+eps)-approximate shortcut for a path");
  path_approx->add_option("--input", input)->required();
  path_approx->add_option("--eps", eps)->required();
  path_approx->add_option("--format", format)->check(CLI::IsMember({"json"}));

  auto* tree_exact = app.add_subcommand("tree-exact", "Optimal shortcut for a tree");
  tree_exact->add_option("--input", input)->required();
  tree_exact->add_option("--inner", inner)->check(CLI::IsMember({"scan", "bsearch"}));
  tree_exact->add_option("--format", format)->check(CLI::IsMember({"json"}));

  auto* brute = app.add_subcommand("brute", "Exhaustive reference optimizer");
  brute->add_option("--input", input)->required();
  brute->add_option("--format", format)->check(CLI::IsMember({"json"}));

  auto* gen = app.add_subcommand("gen", "Emit a random instance as JSON");
  gen->add_option("--kind", kind)->check(CLI::IsMember({"path", "tree"}));
  gen->add_option("--n", n)->required();
  gen->add_option("--seed", seed)->required();
  gen->add_option("--dist", dist)
      ->check(CLI::IsMember({"uniform-square", "collinear", "circle"}));

  auto* bench = app.add_subcommand("bench", "Timing harness; emits CSV");
  bench->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"decision", "exact", "approx", "tree"}));
  bench->add_option("--sizes", sizes)->required();
  bench->add_option("--seed", seed);
  bench->add_option("--eps", eps);
  bench->add_option("--reps", reps);
  bench->add_option("--threads", bench_threads);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(decide)) return run_decide(input, lambda, threads);
    if (app.got_subcommand(path_exact)) return run_path_exact(input, tol, threads, polish);
    if (app.got_subcommand(path_approx)) return run_path_approx(input, eps);
    if (app.got_subcommand(tree_exact)) return run_tree_exact(input, inner);
    if (app.got_subcommand(brute)) return run_brute(input);
    if (app.got_subcommand(gen)) return run_gen(kind, n, seed, dist);
    if (app.got_subcommand(bench))
      return run_bench(suite, sizes, seed, eps, reps, bench_threads);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
  return 0;
}
