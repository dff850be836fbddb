#include "wspan/verify.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "test_oracles.hpp"
#include "wspan/generators.hpp"

namespace wspan {
namespace {

using testing::make_graph;

WeightedGraph triangle_115() { return make_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 5}}); }

WeightedGraph unit_four_cycle_minus_edge() { return make_graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}}); }

WeightedGraph unit_four_cycle() {
  return make_graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}});
}

TEST(VerifyAdditiveTest, IdentityPassesForAnyC) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = testing::random_small_graph(seed, 25, 0.15, 30);
    auto rep = verify_additive_W(g, g, 0.0);
    EXPECT_TRUE(rep.passed());
    EXPECT_EQ(rep.max_slack_ratio, 0.0);
    // pairs_checked counts connected pairs only.
    const auto d = testing::floyd_warshall(g);
    std::size_t connected = 0;
    for (Vertex u = 0; u < 25; ++u)
      for (Vertex v = u + 1; v < 25; ++v) connected += d[u * 25 + v] != kInfinity;
    EXPECT_EQ(rep.pairs_checked, connected);
  }
}

TEST(VerifyAdditiveTest, TriangleWithoutHeavyEdge) {
  auto g = triangle_115();
  auto h = make_graph(3, {{0, 1, 1}, {1, 2, 1}});
  auto rep = verify_additive_W(g, h, 0.0);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.size, 2u);
}

TEST(VerifyAdditiveTest, EmptySpannerIsAllUnreachable) {
  auto g = unit_four_cycle();
  auto rep = verify_additive_W(g, WeightedGraph(4), 100.0);
  ASSERT_EQ(rep.violations.size(), 6u);
  for (const auto& v : rep.violations) EXPECT_EQ(v.kind, ViolationKind::kUnreachable);
}

TEST(VerifyAdditiveTest, ReportsSlackAgainstCanonicalW) {
  // Path 0-1-2-3 of weights 1, 4, 1 plus a heavy shortcut 0-3 of weight 6;
  // the spanner drops the middle edge.
  auto g = make_graph(4, {{0, 1, 1}, {1, 2, 4}, {2, 3, 1}, {0, 3, 6}});
  auto h = make_graph(4, {{0, 1, 1}, {2, 3, 1}, {0, 3, 6}});
  auto rep = verify_additive_W(g, h, 1.0);
  // (1,2): d_G = 4, d_H = 1 + 6 + 1 = 8, W = 4 -> slack 1 W, passes at c = 1.
  EXPECT_TRUE(rep.passed());
  EXPECT_DOUBLE_EQ(rep.max_slack_ratio, 1.0);
  auto tight = verify_additive_W(g, h, 0.5);
  ASSERT_EQ(tight.violations.size(), 1u);
  EXPECT_EQ(tight.violations[0].u, 1u);
  EXPECT_EQ(tight.violations[0].v, 2u);
  EXPECT_EQ(tight.violations[0].slack, 4.0);
  EXPECT_EQ(tight.violations[0].kind, ViolationKind::kStretch);
}

TEST(VerifyAdditiveTest, SubsetPairClass) {
  auto g = make_graph(4, {{0, 1, 1}, {1, 2, 4}, {2, 3, 1}, {0, 3, 6}});
  auto h = make_graph(4, {{0, 1, 1}, {2, 3, 1}, {0, 3, 6}});
  auto rep = verify_additive_W(g, h, 0.5, PairClass::within({3, 0, 3}));
  EXPECT_EQ(rep.pairs_checked, 1u);
  EXPECT_TRUE(rep.passed());
}

TEST(VerifyAdditiveTest, VertexMismatchIsAnError) {
  EXPECT_THROW(verify_additive_W(triangle_115(), WeightedGraph(4), 1.0), Error);
  EXPECT_THROW(verify_multiplicative(triangle_115(), WeightedGraph(4), 1.0), Error);
  EXPECT_THROW(verify_non_contracting(triangle_115(), WeightedGraph(4)), Error);
}

TEST(VerifyAdditiveTest, ToleranceIsRelative) {
  auto g = make_graph(2, {{0, 1, 1e6}});
  auto h = make_graph(2, {{0, 1, 1e6 * (1 + 1e-10)}});
  EXPECT_TRUE(verify_additive_W(build_index(g), h, [](std::size_t) { return 0.0; }).passed());
  auto h2 = make_graph(2, {{0, 1, 1e6 * (1 + 1e-8)}});
  EXPECT_FALSE(verify_additive_W(build_index(g), h2, [](std::size_t) { return 0.0; }).passed());
}

TEST(VerifyAdditiveTest, MinimaxCrossCheckOnSmallGraphs) {
  // Two shortest 0-3 paths of length 4: 0-1-3 (weights 2, 2) and 0-2-3
  // (weights 1, 3). The minimax W is 2.
  auto g = make_graph(4, {{0, 1, 2}, {1, 3, 2}, {0, 2, 1}, {2, 3, 3}});
  auto rep = verify_additive_W(g, g, 1.0);
  ASSERT_TRUE(rep.minimax.has_value());
  const auto d = testing::floyd_warshall(g);
  const auto mm = minimax_shortest_path_weight(g, d);
  EXPECT_EQ(mm[0 * 4 + 3], 2.0);
  // Exhaustive oracle over all simple shortest paths on random small graphs.
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto r = testing::random_small_graph(seed, 8, 0.45, 4);
    const auto dr = testing::floyd_warshall(r);
    const auto got = minimax_shortest_path_weight(r, dr);
    for (Vertex u = 0; u < 8; ++u) {
      for (Vertex v = 0; v < 8; ++v) {
        if (u == v || dr[u * 8 + v] == kInfinity) continue;
        double best = kInfinity;
        for (const auto& p : testing::all_simple_paths(r, u, v)) {
          const auto c = testing::path_cost(r, p);
          if (c.length == dr[u * 8 + v]) best = std::min(best, c.heaviest);
        }
        ASSERT_EQ(got[u * 8 + v], best);
      }
    }
    auto check = compare_canonical_to_minimax(build_index(r));
    EXPECT_GE(check.max_gap, 0.0);
  }
  auto big = verify_additive_W(testing::random_small_graph(1, 11, 0.4, 4),
                               testing::random_small_graph(1, 11, 0.4, 4), 1.0);
  EXPECT_FALSE(big.minimax.has_value());
}

TEST(VerifyMultiplicativeTest, Examples) {
  auto g = unit_four_cycle();
  EXPECT_TRUE(verify_multiplicative(g, g, 1.0).passed());
  auto h = unit_four_cycle_minus_edge();
  EXPECT_TRUE(verify_multiplicative(g, h, 3.0).passed());
  auto rep = verify_multiplicative(g, h, 2.0);
  ASSERT_EQ(rep.violations.size(), 1u);
  EXPECT_EQ(rep.violations[0].u, 0u);
  EXPECT_EQ(rep.violations[0].v, 3u);
  EXPECT_EQ(rep.violations[0].d_h, 3.0);
  EXPECT_THROW(verify_multiplicative(g, h, 0.5), Error);
}

TEST(VerifySubgraphTest, Examples) {
  auto g = triangle_115();
  EXPECT_TRUE(verify_subgraph(g, g));
  EXPECT_FALSE(verify_subgraph(g, make_graph(3, {{0, 1, 2}})));
  // A virtual edge standing in for the two-hop distance.
  EXPECT_FALSE(verify_subgraph(make_graph(3, {{0, 1, 1}, {1, 2, 1}}), make_graph(3, {{0, 2, 2}})));
}

TEST(VerifyNonContractingTest, Examples) {
  auto g = make_graph(3, {{0, 1, 1}, {1, 2, 3}});
  EXPECT_TRUE(verify_non_contracting(g, g).passed());
  auto exact = make_graph(3, {{0, 1, 1}, {1, 2, 3}, {0, 2, 4}});
  EXPECT_TRUE(verify_non_contracting(g, exact).passed());
  auto planted = make_graph(3, {{0, 1, 1}, {1, 2, 3}, {0, 2, 2}});
  auto rep = verify_non_contracting(g, planted);
  ASSERT_EQ(rep.violations.size(), 1u);
  EXPECT_EQ(rep.violations[0].u, 0u);
  EXPECT_EQ(rep.violations[0].v, 2u);
  EXPECT_EQ(rep.violations[0].kind, ViolationKind::kContracting);
  // Joining two components contracts an infinite distance.
  auto split = make_graph(3, {{0, 1, 1}});
  EXPECT_FALSE(verify_non_contracting(split, g).passed());
}

TEST(SizeScalingFitTest, SyntheticData) {
  std::vector<std::pair<double, double>> pow43, linear, constant;
  for (double n : {64.0, 128.0, 256.0, 512.0}) {
    pow43.push_back({n, std::pow(n, 4.0 / 3.0)});
    linear.push_back({n, 3 * n});
    constant.push_back({n, 17});
  }
  EXPECT_NEAR(size_scaling_fit(pow43), 4.0 / 3.0, 1e-3);
  EXPECT_NEAR(size_scaling_fit(linear), 1.0, 1e-12);
  EXPECT_NEAR(size_scaling_fit(constant), 0.0, 1e-12);
}

TEST(SizeScalingFitTest, NeedsThreeDistinctSizes) {
  std::vector<std::pair<double, double>> two{{10, 5}, {20, 9}, {20, 11}};
  EXPECT_THROW(size_scaling_fit(two), Error);
  std::vector<std::pair<double, double>> bad{{10, 5}, {20, 0}, {30, 1}};
  EXPECT_THROW(size_scaling_fit(bad), Error);
}

TEST(VerifyPropertyTest, AddingEdgesNeverHurts) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GenSpec spec;
    spec.n = 40;
    spec.p = 0.2;
    spec.weights = WeightModel::kUniform;
    spec.seed = seed;
    auto g = generate(spec);
    auto idx = build_index(g);
    std::vector<EdgeId> ids;
    auto prev_violations = static_cast<std::size_t>(-1);
    double prev_ratio = kInfinity;
    for (EdgeId id = 0; id < g.num_edges(); ++id) {
      ids.push_back(id);
      if (id % 10 != 9 && id + 1 != g.num_edges()) continue;
      auto rep = verify_additive_W(idx, edge_subgraph(g, ids), [](std::size_t) { return 2.0; });
      ASSERT_LE(rep.violations.size(), prev_violations);
      ASSERT_LE(rep.max_slack_ratio, prev_ratio);
      prev_violations = rep.violations.size();
      prev_ratio = rep.max_slack_ratio;
    }
    EXPECT_EQ(prev_violations, 0u);
  }
}

}  // namespace
}  // namespace wspan
