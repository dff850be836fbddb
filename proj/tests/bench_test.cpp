#include "wspan/bench.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace wspan {
namespace {

TEST(ParseAlgoTest, DefaultsAndParameters) {
  auto six = parse_algo("6w");
  EXPECT_EQ(six.name, "6w");
  EXPECT_EQ(six.eps, 1.0);
  EXPECT_EQ(parse_algo("6w:0.1").eps, 0.1);
  auto poly = parse_algo("poly:0.5:9");
  EXPECT_EQ(poly.eps, 0.5);
  EXPECT_EQ(poly.c, 9.0);
  EXPECT_EQ(parse_algo("poly").eps, 0.0);
  EXPECT_EQ(parse_algo("mult:3").k, 3u);
  EXPECT_EQ(parse_algo("fast2w").c, 4.0);
  EXPECT_TRUE(parse_algo("emulator4w").randomized());
  EXPECT_FALSE(parse_algo("subsetwise:2").randomized());
  EXPECT_THROW(parse_algo("bogus"), Error);
  EXPECT_THROW(parse_algo("6w:x"), Error);
  EXPECT_THROW(parse_algo("6w:1:2"), Error);
  EXPECT_THROW(parse_algo("emulator4w:1"), Error);
}

TEST(RunBenchTest, EmptyAlgoListGivesNoRecords) {
  CorpusSpec c;
  c.sizes = {20, 30};
  auto records = run_bench(c, {}, {1});
  EXPECT_TRUE(records.empty());
  EXPECT_FALSE(deterministic_failure(records));
  std::ostringstream out;
  write_records(out, records);
  EXPECT_EQ(out.str(), "");
}

TEST(RunBenchTest, TreesAreIncompressible) {
  CorpusSpec c;
  c.family = Family::kTree;
  c.sizes = {30, 60, 90};
  c.graph_seeds = {1, 2};
  auto records = run_bench(c, {parse_algo("6w:1")}, {1});
  ASSERT_EQ(records.size(), 6u);
  for (const auto& r : records) {
    EXPECT_EQ(r.m_out, r.m_in);
    EXPECT_TRUE(r.verify_pass);
    EXPECT_EQ(r.family, "tree");
    EXPECT_FALSE(r.seed.has_value());
  }
}

TEST(RunBenchTest, DeterministicApartFromWallTime) {
  CorpusSpec c;
  c.sizes = {40, 50};
  c.graph_seeds = {3, 4};
  c.p = 0.15;
  c.weights = WeightModel::kExpSpread;
  std::vector<AlgoSpec> algos;
  for (const char* a : {"6w:1", "subsetwise:1", "poly:0.5", "mult:2", "fast2w:4", "emulator4w"})
    algos.push_back(parse_algo(a));
  auto strip = [](std::vector<BenchRecord> rs) {
    std::ostringstream out;
    for (auto& r : rs) r.wall_time_ms = 0.0;
    write_records(out, rs);
    return out.str();
  };
  auto a = run_bench(c, algos, {1, 2}, 1);
  auto b = run_bench(c, algos, {1, 2}, 3);
  EXPECT_EQ(strip(a), strip(b));
  // Per instance: 6w, poly, mult once; subsetwise, fast2w, emulator4w once per seed.
  EXPECT_EQ(a.size(), 4u * (3 + 2 + 2 + 2));
  EXPECT_FALSE(deterministic_failure(a));
  for (const auto& r : a) EXPECT_TRUE(r.verify_pass) << r.algo << " n=" << r.n;
}

TEST(RunBenchTest, RecordsSerializeAsJsonLines) {
  CorpusSpec c;
  c.sizes = {25};
  auto records = run_bench(c, {parse_algo("fast2w:4")}, {7});
  std::ostringstream out;
  write_records(out, records);
  auto j = nlohmann::json::parse(out.str());
  for (const char* key : {"algo", "params", "n", "m_in", "m_out", "paths_bought", "wall_time_ms",
                          "seed", "verify_pass", "max_slack_ratio"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["seed"], 7);
}

TEST(RunBenchTest, AverageDegreeExponentSetsP) {
  CorpusSpec c;
  c.avg_degree_exp = 0.5;
  EXPECT_NEAR(instance_spec(c, 101, 1).p, 10.0498756 / 100.0, 1e-6);
}

TEST(MedianTest, OddEvenAndGrouping) {
  EXPECT_EQ(median({3, 1, 2}), 2.0);
  EXPECT_EQ(median({4, 1, 2, 3}), 2.5);
  EXPECT_THROW(median({}), Error);
  std::vector<BenchRecord> rs;
  for (auto [algo, n, m] : {std::tuple("x", 10, 5), {"x", 10, 7}, {"x", 20, 9}, {"y", 20, 1}}) {
    BenchRecord r;
    r.algo = algo;
    r.n = n;
    r.m_out = m;
    rs.push_back(r);
  }
  auto m = medians_by_size(rs, "x", [](const BenchRecord& r) { return double(r.m_out); });
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[0], (std::pair<double, double>{10, 6}));
  EXPECT_EQ(m[1], (std::pair<double, double>{20, 9}));
}

}  // namespace
}  // namespace wspan
