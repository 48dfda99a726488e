#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "diamaug/generate.hpp"
#include "diamaug/wspd.hpp"

using namespace diamaug;

namespace {

std::vector<double> random_coords(std::mt19937_64& rng, int n, double scale = 1.0) {
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (double& x : xs) x = uniform01(rng) * scale;
  std::sort(xs.begin(), xs.end());
  return xs;
}

}  // namespace

TEST_CASE("split tree structure on tiny inputs") {
  SECTION("two points become two leaves") {
    const auto tree = build_split_tree({0.0, 1.0});
    const auto& root = tree.nodes[tree.root];
    REQUIRE_FALSE(root.leaf());
    CHECK(tree.nodes[root.left].begin == 0);
    CHECK(tree.nodes[root.left].end == 1);
    CHECK(tree.nodes[root.right].begin == 1);
    CHECK(tree.nodes[root.right].end == 2);
  }
  SECTION("midpoint split of four evenly spaced points") {
    const auto tree = build_split_tree({0.0, 1.0, 2.0, 3.0});
    const auto& root = tree.nodes[tree.root];
    CHECK(tree.nodes[root.left].end == 2);  // split at coordinate 1.5
    CHECK(tree.nodes[root.right].begin == 2);
  }
  SECTION("single point") {
    const auto tree = build_split_tree({4.0});
    CHECK(tree.nodes[tree.root].leaf());
  }
  SECTION("input validation") {
    CHECK_THROWS_AS(build_split_tree({}), std::invalid_argument);
    CHECK_THROWS_AS(build_split_tree({2.0, 1.0}), std::invalid_argument);
  }
}

TEST_CASE("duplicate coordinates split by index halving") {
  const auto tree = build_split_tree({1.0, 1.0, 1.0, 1.0});
  const auto& root = tree.nodes[tree.root];
  REQUIRE_FALSE(root.leaf());
  CHECK(tree.nodes[root.left].end == 2);
  const auto pairs = compute_wspd(tree, 8.0);
  CHECK(validate_wspd(tree.coords, pairs, 8.0));
  CHECK(pairs.size() == 6);  // all singleton pairs
}

TEST_CASE("decomposition of two points is a single pair") {
  const auto tree = build_split_tree({0.0, 1.0});
  const auto pairs = compute_wspd(tree, 2.0);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs.front().rep_a != pairs.front().rep_b);
  CHECK(validate_wspd(tree.coords, pairs, 2.0));
}

TEST_CASE("every unordered pair is covered exactly once") {
  const auto tree = build_split_tree({0.0, 1.0, 2.0, 3.0});
  const auto pairs = compute_wspd(tree, 1.0);
  CHECK(validate_wspd(tree.coords, pairs, 1.0));

  const auto lonely = build_split_tree({5.0});
  CHECK(compute_wspd(lonely, 1.0).empty());
}

TEST_CASE("separation constant must be positive") {
  const auto tree = build_split_tree({0.0, 1.0});
  CHECK_THROWS_AS(compute_wspd(tree, 0.0), std::invalid_argument);
}

TEST_CASE("validation catches broken decompositions") {
  std::mt19937_64 rng(67);
  const auto coords = random_coords(rng, 40);
  const auto tree = build_split_tree(coords);
  auto pairs = compute_wspd(tree, 4.0);
  REQUIRE(validate_wspd(coords, pairs, 4.0));

  SECTION("coverage fails with a deleted pair") {
    pairs.pop_back();
    CHECK_FALSE(validate_wspd(coords, pairs, 4.0));
  }
  SECTION("tight two-cluster separation fails at double the constant") {
    const std::vector<double> tight{0.0, 1.0, 10.0, 11.0};
    const auto tight_tree = build_split_tree(tight);
    const auto tight_pairs = compute_wspd(tight_tree, 18.0);
    REQUIRE(validate_wspd(tight, tight_pairs, 18.0));
    CHECK_FALSE(validate_wspd(tight, tight_pairs, 36.0));
  }
}

TEST_CASE("compute_wspd validates on random sets across separations") {
  std::mt19937_64 rng(71);
  for (double s : {2.0, 8.0, 32.0}) {
    for (int trial = 0; trial < 6; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 150);
      const auto coords = random_coords(rng, n);
      const auto pairs = compute_wspd(build_split_tree(coords), s);
      CHECK(validate_wspd(coords, pairs, s));
    }
  }
}

TEST_CASE("well-separated pairs bound cross and internal distances") {
  // For points x,p in A and y,q in B: |xy| <= (1+4/s)|pq|, |px| <= (2/s)|pq|.
  std::mt19937_64 rng(73);
  for (double s : {2.0, 8.0}) {
    for (int trial = 0; trial < 8; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 40);
      const auto coords = random_coords(rng, n);
      const auto pairs = compute_wspd(build_split_tree(coords), s);
      for (const auto& p : pairs)
        for (int x = p.a_begin; x < p.a_end; ++x)
          for (int pp = p.a_begin; pp < p.a_end; ++pp)
            for (int y = p.b_begin; y < p.b_end; ++y)
              for (int q = p.b_begin; q < p.b_end; ++q) {
                const double pq = std::abs(coords[pp] - coords[q]);
                CHECK(std::abs(coords[x] - coords[y]) <=
                      (1.0 + 4.0 / s) * pq + 1e-12);
                CHECK(std::abs(coords[pp] - coords[x]) <= (2.0 / s) * pq + 1e-12);
              }
    }
  }
}

TEST_CASE("pair count stays linear in s * n") {
  std::mt19937_64 rng(79);
  for (double s : {2.0, 8.0, 32.0}) {
    for (int n : {100, 400, 1000}) {
      const auto coords = random_coords(rng, n);
      const auto pairs = compute_wspd(build_split_tree(coords), s);
      // Regression band measured on random inputs, not a proof.
      CHECK(static_cast<double>(pairs.size()) <= 4.0 * (s + 1.0) * n);
    }
  }
}
