#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "diamaug/generate.hpp"
#include "diamaug/oracle.hpp"
#include "diamaug/unicyclic.hpp"
#include "support.hpp"

using namespace diamaug;
using testsupport::unit_square_path;

TEST_CASE("four parts on the unit square") {
  const auto path = unit_square_path();
  const auto parts = four_parts(path, make_shortcut(path, 0, 3));
  CHECK(parts.from_start == Catch::Approx(2.0).margin(1e-12));
  CHECK(parts.to_end == Catch::Approx(2.0).margin(1e-12));
  CHECK(parts.across == Catch::Approx(1.0).margin(1e-12));
  CHECK(parts.on_cycle == Catch::Approx(2.0).margin(1e-12));
  CHECK(parts.diameter() == Catch::Approx(2.0).margin(1e-12));

  const auto diag = four_parts(path, make_shortcut(path, 0, 2));
  CHECK(diag.across == Catch::Approx(std::sqrt(2.0) + 1.0).margin(1e-12));
}

TEST_CASE("four parts on a collinear triple") {
  const auto path = testsupport::collinear_path({0, 1, 2});
  const auto parts = four_parts(path, make_shortcut(path, 0, 2));
  CHECK(parts.across == Catch::Approx(2.0).margin(1e-12));
  CHECK(parts.diameter() == Catch::Approx(2.0).margin(1e-12));
}

TEST_CASE("shortcut validation") {
  const auto path = unit_square_path();
  CHECK_THROWS_AS(make_shortcut(path, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_shortcut(path, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_shortcut(path, 0, 4), std::invalid_argument);
  CHECK_THROWS_AS(path_diameter_with_shortcut(path, {1, 2, 0.5}),
                  std::invalid_argument);
}

TEST_CASE("diameter with shortcut matches Dijkstra on every shortcut") {
  CHECK(path_diameter_with_shortcut(unit_square_path(),
                                    make_shortcut(unit_square_path(), 0, 3)) ==
        Catch::Approx(2.0).margin(1e-12));
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 12; ++trial) {
    const auto dist = trial % 3 == 0   ? PointDistribution::circle
                      : trial % 3 == 1 ? PointDistribution::collinear
                                       : PointDistribution::uniform_square;
    const int n = 4 + static_cast<int>(rng() % 47);
    const auto path = generate_path(n, rng(), dist);
    for (int a = 0; a < n; ++a)
      for (int b = a + 2; b < n; ++b) {
        const auto sc = make_shortcut(path, a, b);
        CHECK(path_diameter_with_shortcut(path, sc) ==
              Catch::Approx(testsupport::dijkstra_path_diameter(path, sc)).margin(1e-9));
      }
  }
}

TEST_CASE("duplicate points do not confuse the evaluator") {
  const auto path = testsupport::collinear_path({0, 0, 1, 2, 2});
  for (int a = 0; a < path.size(); ++a)
    for (int b = a + 2; b < path.size(); ++b) {
      const auto sc = make_shortcut(path, a, b);
      CHECK(path_diameter_with_shortcut(path, sc) ==
            Catch::Approx(testsupport::dijkstra_path_diameter(path, sc)).margin(1e-12));
    }
}

TEST_CASE("collinear paths keep their full length under any shortcut") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 30);
    const auto path = generate_path(n, rng(), PointDistribution::collinear);
    for (int a = 0; a < n; ++a)
      for (int b = a + 2; b < n; ++b)
        CHECK(path_diameter_with_shortcut(path, make_shortcut(path, a, b)) ==
              Catch::Approx(path.length()).margin(1e-12 * path.length()));
  }
}

TEST_CASE("the four parts move monotonically in the far endpoint") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 36);
    const auto path = generate_path(n, rng(), PointDistribution::uniform_square);
    for (int a = 0; a + 3 < n; ++a) {
      FourPartValues prev = four_parts_prefix(path.prefix_sums(), a, a + 2,
                                              path.metric_distance(a, a + 2));
      for (int b = a + 3; b < n; ++b) {
        const FourPartValues cur =
            four_parts_prefix(path.prefix_sums(), a, b, path.metric_distance(a, b));
        CHECK(cur.from_start >= prev.from_start - 1e-12);
        CHECK(cur.to_end <= prev.to_end + 1e-12);
        CHECK(cur.across <= prev.across + 1e-12);
        CHECK(cur.on_cycle >= prev.on_cycle - 1e-12);
        prev = cur;
      }
    }
  }
}

TEST_CASE("augmentation never increases the diameter") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 40);
    const auto path = generate_path(n, rng(), PointDistribution::uniform_square);
    for (int rep = 0; rep < 20; ++rep) {
      const int a = static_cast<int>(rng() % static_cast<std::uint64_t>(n - 2));
      const int b =
          a + 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - a - 2));
      CHECK(path_diameter_with_shortcut(path, make_shortcut(path, a, b)) <=
            path.length());
    }
  }
}

TEST_CASE("cycle routes split the cycle length exactly") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 30);
    const auto path = generate_path(n, rng(), PointDistribution::uniform_square);
    const auto d = path.prefix_sums();
    const int a = static_cast<int>(rng() % static_cast<std::uint64_t>(n - 2));
    const int b = a + 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - a - 2));
    const double w = path.metric_distance(a, b);
    const double cyc = (d[b] - d[a]) + w;
    for (int x = a; x <= b; ++x)
      for (int y = x + 1; y <= b; ++y) {
        const double near_side = d[y] - d[x];
        const double far_side = ((d[x] - d[a]) + w) + (d[b] - d[y]);
        CHECK(near_side + far_side == Catch::Approx(cyc).margin(1e-12 * (1.0 + cyc)));
      }
  }
}

TEST_CASE("caterpillar with zero pendant heights behaves like a plain path") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 20);
    const auto path = generate_path(n, rng(), PointDistribution::uniform_square);
    std::vector<double> spine_w;
    for (int i = 0; i + 1 < n; ++i) spine_w.push_back(path.metric_distance(i, i + 1));
    const auto cat =
        testsupport::make_caterpillar(spine_w, std::vector<double>(n, 0.0));
    for (int a = 0; a < n; ++a)
      for (int b = a + 2; b < n; ++b) {
        const double w = path.metric_distance(a, b);
        CHECK(caterpillar_diameter_with_shortcut(cat, {a, b, w}) ==
              Catch::Approx(path_diameter_with_shortcut(path, {a, b, w}))
                  .margin(1e-12 * (1.0 + path.length())));
      }
  }
}

TEST_CASE("caterpillar diameter matches Dijkstra on the expanded tree") {
  // Unit spine with a tall middle pendant; its leaf out-reaches both ends.
  {
    const std::vector<double> spine_w(5, 1.0);
    const std::vector<double> h{0, 0, 3, 0, 0, 0};
    const auto cat = testsupport::make_caterpillar(spine_w, h);
    const auto adj = testsupport::caterpillar_adjacency(spine_w, h);
    const Shortcut ends{0, 5, 2.0};
    CHECK(caterpillar_diameter_with_shortcut(cat, ends) ==
          Catch::Approx(augmented_diameter_dijkstra(adj, ExtraEdge{0, 5, 2.0}))
              .margin(1e-9));
  }
  // Randomized spines, heights, and shortcut weights.
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 3 + static_cast<int>(rng() % 8);
    std::vector<double> spine_w(static_cast<std::size_t>(m - 1));
    for (double& w : spine_w) w = 0.1 + uniform01(rng);
    std::vector<double> h(static_cast<std::size_t>(m));
    for (double& x : h) x = rng() % 3 == 0 ? 0.0 : 2.0 * uniform01(rng);
    const auto cat = testsupport::make_caterpillar(spine_w, h);
    const auto adj = testsupport::caterpillar_adjacency(spine_w, h);
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        const double weight =
            uniform01(rng) * (cat.spine_prefix[b] - cat.spine_prefix[a]);
        CHECK(caterpillar_diameter_with_shortcut(cat, {a, b, weight}) ==
              Catch::Approx(
                  augmented_diameter_dijkstra(adj, ExtraEdge{a, b, weight}))
                  .margin(1e-9));
      }
  }
}

TEST_CASE("caterpillar shortcut endpoints must sit on the spine") {
  const auto cat = testsupport::make_caterpillar({1.0, 1.0}, {0.0, 0.0, 0.0});
  CHECK_THROWS_AS(caterpillar_diameter_with_shortcut(cat, {0, 3, 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(caterpillar_diameter_with_shortcut(cat, {2, 1, 1.0}),
                  std::invalid_argument);
}

TEST_CASE("intra-component floor caps the caterpillar result") {
  const auto cat = testsupport::make_caterpillar({1.0, 1.0, 1.0}, {0, 0, 0, 0}, 9.0);
  CHECK(caterpillar_diameter_with_shortcut(cat, {0, 3, 0.5}) == 9.0);
}
